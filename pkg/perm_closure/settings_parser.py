# -*- coding: utf-8 -*-
"""Module perm_closure.settings_parser.py

This module contains class definition for SettingsParser, which loads the
optional YAML settings file, validates it against schemas/settings.json and
merges it over the built-in defaults. Will raise SettingsException if an
error is detected.
"""

import copy

import yaml

from perm_closure.config.constants import DEFAULT_SETTINGS
from perm_closure.config.constants import SCHEMA_FILE_SETTINGS
from perm_closure.exceptions.settings_exception import SettingsException
from perm_closure.schema_validator import SchemaValidator

def merge_settings(base, override):
    """recursive dictionary merge, override wins"""

    merged = copy.deepcopy(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = merge_settings(merged[key], value)
        else:
            merged[key] = value
    return merged

class SettingsParser(object):
    """Parses the YAML settings file

    Attributes:
        settings_file (str): path to YAML settings file, None for defaults
        d (dict): dictionary loaded from the YAML
    """

    def __init__(self, settings_file=None):
        """instantiate a SettingsParser object

        Args:
            settings_file (str): path to YAML settings file
        """

        self.settings_file = settings_file
        self.d = {}

    def parse_settings_file(self):
        """parse YAML settings file into dictionary object

        Raises:
            FileNotFoundError: the settings file does not exist
            SettingsException: the file is not valid YAML
        """

        if self.settings_file is None:
            self.d = {}
            return
        try:
            with open(self.settings_file, "r") as yaml_file:
                self.d = yaml.safe_load(yaml_file)
        except FileNotFoundError:
            raise FileNotFoundError("settings file: " + self.settings_file
                                    + " not found")
        except yaml.YAMLError as e:
            raise SettingsException("settings file could not be parsed: "
                                    + str(e))
        if self.d is None:
            self.d = {}

    def validate_settings_file(self):
        """validate the loaded dictionary against the settings schema

        Raises:
            SettingsException: the document does not match the schema
        """

        result = SchemaValidator(SCHEMA_FILE_SETTINGS).validate_instance(self.d)
        if result["status"] != 1:
            raise SettingsException("invalid settings: " + result["message"])

    def settings(self):
        """defaults overridden by the settings file"""

        return merge_settings(DEFAULT_SETTINGS, self.d)

def load_settings(settings_file=None):
    parser = SettingsParser(settings_file)
    parser.parse_settings_file()
    parser.validate_settings_file()
    return parser.settings()
