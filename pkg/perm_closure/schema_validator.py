# -*- coding: utf-8 -*-
"""Module perm_closure.schema_validator.py

This module contains class definition for SchemaValidator, which checks a
loaded settings document against a JSON schema from the schemas directory
and reports the most relevant violation with its dotted key path.
"""

import inspect
import json
import os

from jsonschema import Draft7Validator
from jsonschema.exceptions import best_match

from perm_closure.config.constants import SCHEMA_RELATIVE_DIR

def error_path(error):
    """dotted key path of a validation error, empty at the document root"""

    return ".".join(str(p) for p in error.absolute_path)

class SchemaValidator(object):
    """Validates a document against a schema shipped with the package

    Attributes:
        schema_file (str): name of the schema file (without directory)
        schema_dir (str): directory holding the schema files
        schema_json (dict): dictionary representation of the schema file
        validator (Draft7Validator): compiled validator for schema_json
    """

    def __init__(self, schema_file):
        """instantiates a SchemaValidator object

        Args:
            schema_file (string): name of JSON schema file (without directory)
        """

        self.schema_file = schema_file
        self.schema_dir = os.path.join(
            os.path.dirname(inspect.getmodule(self).__file__),
            SCHEMA_RELATIVE_DIR)
        with open(os.path.join(self.schema_dir, schema_file), "r") as f:
            self.schema_json = json.load(f)
        Draft7Validator.check_schema(self.schema_json)
        self.validator = Draft7Validator(self.schema_json)

    def validate_instance(self, instance_json):
        """validate a document, reporting its most relevant violation

        Args:
            instance_json (dict): document loaded from YAML or JSON

        Returns:
            validation_result (dict): status 1 on success, -1 on failure,
                with the exception class name and a message prefixed by the
                dotted path of the offending key
        """

        error = best_match(self.validator.iter_errors(instance_json))
        if error is None:
            return {"status": 1, "exception_class": "", "message": ""}

        path = error_path(error)
        return {
            "status": -1,
            "exception_class": type(error).__name__,
            "message": (path + ": " if path else "") + error.message
        }
