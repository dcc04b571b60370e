# -*- coding: utf-8 -*-
"""Module unittests.test_schema_validator.py

This module contains methods to test the schema_validator module via pytest.
"""

from perm_closure.config.constants import DEFAULT_SETTINGS
from perm_closure.config.constants import SCHEMA_FILE_SETTINGS
from perm_closure.schema_validator import SchemaValidator

def template(instance, status, message=""):
    """asserts the validation status and error message of one instance"""

    result = SchemaValidator(SCHEMA_FILE_SETTINGS).validate_instance(instance)
    assert result["status"] == status
    assert result["message"] == message
    if status == -1:
        assert result["exception_class"] == "ValidationError"

def test_constructor():
    validator = SchemaValidator(SCHEMA_FILE_SETTINGS)
    assert validator.schema_file == "settings.json"
    assert validator.schema_dir.endswith("schemas")
    assert validator.schema_json["title"] == "perm-closure settings"

def test_valid_instances():
    template({}, 1)
    template(DEFAULT_SETTINGS, 1)
    template({"oracle": {"max_len": 0}}, 1)

def test_invalid_instances():
    template({"grid": {"cap": 0}}, -1,
             "grid.cap: 0 is less than the minimum of 1")
    template({"rewrite": {"step_budget": "many"}}, -1,
             "rewrite.step_budget: 'many' is not of type 'integer'")
    template({"seed": 3}, -1,
             "Additional properties are not allowed ('seed' was unexpected)")
    template(["grid"], -1, "['grid'] is not of type 'object'")
