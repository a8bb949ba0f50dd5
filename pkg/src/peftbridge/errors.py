"""Exception types shared across the package."""


class PeftBridgeError(Exception):
    """Base class for all package errors."""


# --- numerics ---
class DimensionMismatch(PeftBridgeError):
    pass


class InvalidTemperature(PeftBridgeError):
    pass


class LengthMismatch(PeftBridgeError):
    pass


class StepOutOfRange(PeftBridgeError):
    pass


class InvalidDistribution(PeftBridgeError):
    pass


# --- model ---
class UnsupportedCharacter(PeftBridgeError):
    pass


class SequenceTooLong(PeftBridgeError):
    pass


class ShapeMismatch(PeftBridgeError):
    pass


class EmptyCompletion(PeftBridgeError):
    pass


class PromptTooLong(PeftBridgeError):
    pass


class InitTextTooLong(PeftBridgeError):
    pass


# --- data ---
class ParseError(PeftBridgeError):
    pass


class ExhaustedSpace(PeftBridgeError):
    pass


class KTooLarge(PeftBridgeError):
    pass


class EmptySplit(PeftBridgeError):
    pass


class EmptyDataset(PeftBridgeError):
    pass


class AuditViolation(PeftBridgeError):
    """A retained train sample was read while the access audit was armed."""


# --- synthesis / distillation ---
class EmptySeedSet(PeftBridgeError):
    pass


class GenerationBudgetExhausted(PeftBridgeError):
    pass


class SizeMismatch(PeftBridgeError):
    pass


class BudgetExhausted(PeftBridgeError):
    """Curation ran out of attempts.  Carries the partial set and its stats."""

    def __init__(self, message, partial=None, stats=None):
        super().__init__(message)
        self.partial = partial if partial is not None else []
        self.stats = stats


class EmptyCorpus(PeftBridgeError):
    pass


# --- analysis ---
class TooFewSamples(PeftBridgeError):
    pass


class DimMismatch(PeftBridgeError):
    pass


# --- harness ---
class GapNotAchieved(PeftBridgeError):
    """Pretraining did not produce a stronger target model.

    Carries both zero-shot accuracies so the caller can decide whether to
    raise the budget.
    """

    def __init__(self, message, source_acc=None, target_acc=None):
        super().__init__(message)
        self.source_acc = source_acc
        self.target_acc = target_acc


class CheckpointError(PeftBridgeError):
    pass
