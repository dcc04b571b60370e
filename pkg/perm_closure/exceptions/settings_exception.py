# -*- coding: utf-8 -*-
"""Module perm_closure.exceptions.settings_exception.py

This module contains class definition for settings file exceptions.
"""

class SettingsException(Exception):
    """Exception for YAML settings file-related errors"""

    pass
