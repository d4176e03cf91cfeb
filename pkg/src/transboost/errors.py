"""Exception hierarchy shared by all transboost modules.

ConfigError maps to CLI exit code 1, DataError and its subclasses to
exit code 2. Check failures (oracle deviations) use exit code 3 and are
not exceptions.
"""


class TransBoostError(Exception):
    """Base class for all library errors."""


class ConfigError(TransBoostError):
    """Invalid configuration value, unknown key, or malformed config file."""


class DataError(TransBoostError):
    """Base class for dataset and input errors."""


class MalformedRow(DataError):
    """CSV row with wrong column count or an unparseable cell."""


class BadLabel(DataError):
    """Label value outside {0, 1}."""


class MissingColumn(DataError):
    """A required column name is absent from the header."""


class EmptyTarget(DataError):
    """Operation requires at least one target-domain row."""


class EmptySource(DataError):
    """Transfer training requires at least one source-domain row."""


class LengthMismatch(DataError):
    """Paired vectors of different lengths."""


class FeatureCountMismatch(DataError):
    """Prediction input column count differs from the trained model."""


class DegenerateLabels(DataError):
    """Metric needs at least one positive and one negative label."""
