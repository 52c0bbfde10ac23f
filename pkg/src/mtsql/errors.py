"""Error taxonomy shared by all modules.

Every error carries a stable ``category`` string so the CLI can map failures
to machine-readable categories and exit codes.
"""

from __future__ import annotations


class MtsqlError(Exception):
    category = "Error"

    def __init__(self, message: str = ""):
        super().__init__(message)
        self.message = message

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return f"{self.category}: {self.message}" if self.message else self.category


# --- catalog ---------------------------------------------------------------

class DuplicateTenant(MtsqlError):
    category = "DuplicateTenant"


class UnknownTenant(MtsqlError):
    category = "UnknownTenant"


class DuplicateTable(MtsqlError):
    category = "DuplicateTable"


class UnknownTable(MtsqlError):
    category = "UnknownTable"


class UnknownColumn(MtsqlError):
    category = "UnknownColumn"


class ConvertibleOnGlobalTable(MtsqlError):
    category = "ConvertibleOnGlobalTable"


class UnknownConversionPair(MtsqlError):
    category = "UnknownConversionPair"


class NotAuthorized(MtsqlError):
    category = "NotAuthorized"


class CatalogFormatError(MtsqlError):
    category = "CatalogFormatError"


# --- conversion ------------------------------------------------------------

class DomainError(MtsqlError):
    category = "DomainError"


# --- parsing ---------------------------------------------------------------

class SqlSyntaxError(MtsqlError):
    category = "SyntaxError"

    def __init__(self, message: str, line: int = 0, column: int = 0):
        super().__init__(f"{message} (line {line}, column {column})" if line else message)
        self.line = line
        self.column = column


# --- rewriting -------------------------------------------------------------

class IncomparableAttributes(MtsqlError):
    category = "IncomparableAttributes"


class MissingPrivilege(MtsqlError):
    category = "MissingPrivilege"


class NotNullWithoutValue(MtsqlError):
    category = "NotNullWithoutValue"


class RewriteError(MtsqlError):
    category = "RewriteError"


# --- session ---------------------------------------------------------------

class ScopeEvaluationError(MtsqlError):
    category = "ScopeEvaluationError"


# --- executor --------------------------------------------------------------

class ExecutionError(MtsqlError):
    category = "ExecutionError"


class FixtureFormatError(MtsqlError):
    category = "FixtureFormatError"


# --- bench / cli -----------------------------------------------------------

class ConfigError(MtsqlError):
    category = "ConfigError"


class UsageError(MtsqlError):
    category = "UsageError"
