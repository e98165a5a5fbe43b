"""Shared error taxonomy.

DomainError      input outside an operation's mathematical domain
PrecisionError   requested precision not achievable with the given truncation data
ConfigError      malformed or incomplete ingested data
ConsistencyError an internal cross-check (mass formula, splitting check) failed
UnsupportedError a case combination outside the implemented table
"""


class IwtripleError(Exception):
    pass


class DomainError(IwtripleError):
    pass


class PrecisionError(IwtripleError):
    def __init__(self, msg, achievable=None):
        super().__init__(msg)
        self.achievable = achievable


class ConfigError(IwtripleError):
    def __init__(self, msg, field=None):
        super().__init__(msg)
        self.field = field


class ConsistencyError(IwtripleError):
    pass


class UnsupportedError(IwtripleError):
    pass
