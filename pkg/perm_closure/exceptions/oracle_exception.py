# -*- coding: utf-8 -*-
"""Module perm_closure.exceptions.oracle_exception.py

This module contains class definition for brute-force oracle exceptions.
"""

class OracleCapException(Exception):
    """Raised when a bounded enumeration exceeds its configured cap"""

    pass
