"""Exception hierarchy shared across the package."""


class TowerPatchError(Exception):
    """Base class for all errors raised by this package."""


class MissingFile(TowerPatchError):
    """A required input file is absent."""


class ParseError(TowerPatchError):
    """A line of an input file is malformed.

    Carries the offending file and 1-based line number.
    """

    def __init__(self, path, line_no, message):
        super().__init__(f"{path}:{line_no}: {message}")
        self.path = str(path)
        self.line_no = line_no


class SchemaError(TowerPatchError):
    """A data record does not match the expected schema."""


class OversizeShard(TowerPatchError):
    """A shard holds more records than the configured maximum."""


class EmptySet(TowerPatchError):
    """Sampling was requested from a shard set with no records."""


class TokenOutOfRange(TowerPatchError):
    """A token id exceeds the embedding table size."""


class DimensionMismatch(TowerPatchError):
    """An input vector does not match the configured dimension."""


class DegenerateBatch(TowerPatchError):
    """A contrastive batch is too small to define the loss."""


class NonFiniteGradient(TowerPatchError):
    """A gradient contains NaN or Inf."""


class FormatError(TowerPatchError):
    """A checkpoint file is corrupt or not in the expected format."""


class ShapeMismatch(TowerPatchError):
    """Tensor shapes disagree between checkpoints or with the config."""


class NameSetMismatch(TowerPatchError):
    """Two checkpoints do not contain the same tensor names."""


class AlphaOutOfRange(TowerPatchError):
    """The interpolation coefficient is outside [0, 1]."""


class BadTemplate(TowerPatchError):
    """A prompt template does not contain exactly one '{}' placeholder."""


class DegenerateEmbedding(TowerPatchError):
    """An averaged embedding has zero norm and cannot be normalized."""
