"""Exception hierarchy shared by every module."""


class LabError(Exception):
    """Base class for all errors raised by sumprod."""


class MixedGroups(LabError, ValueError):
    pass


class NotOnGroup(LabError, ValueError):
    pass


class EmptySet(LabError, ValueError):
    pass


class IrrationalFiber(LabError, ValueError):
    """A fiber has no rational points although the caller required one."""


class BudgetExceeded(LabError):
    """An enumeration would exceed its configured tuple budget."""


class FactorizationBudgetExceeded(BudgetExceeded):
    pass


class ConstantPolynomial(LabError, ValueError):
    pass


class ZeroPolynomial(LabError, ValueError):
    pass


class DimensionMismatch(LabError, ValueError):
    pass


class Unsupported(LabError, NotImplementedError):
    pass


class GuardRefusal(LabError):
    """An experiment's hypothesis guard rejected the input."""


class TranslateCorrespondence(GuardRefusal):
    pass


class DegenerateInput(GuardRefusal):
    pass


class ConfigError(LabError, ValueError):
    pass


class OffCurveGenerator(ConfigError):
    pass
