"""Exception hierarchy shared by every module."""


class LogicError(Exception):
    """Base class for all errors raised by logicbench."""


class ParseError(LogicError, ValueError):
    def __init__(self, message, position=None, text=None):
        self.position = position
        self.text = text
        if position is not None:
            message = f"{message} at position {position}"
            if text is not None:
                message += f"\n  {text}\n  {' ' * position}^"
        super().__init__(message)


class CaptureError(LogicError):
    def __init__(self, variable, binder):
        self.variable = variable
        self.binder = binder
        super().__init__(
            f"substitution would capture free variable {variable!r} "
            f"under the quantifier ({binder})"
        )


class UnassignedVariable(LogicError):
    def __init__(self, name):
        self.name = name
        super().__init__(f"no value assigned to {name!r}")


class CapExceeded(LogicError):
    pass


class NotATautology(LogicError):
    def __init__(self, formula, countermodel):
        self.formula = formula
        self.countermodel = countermodel
        shown = ", ".join(f"{k}={'T' if v else 'F'}" for k, v in countermodel.items())
        super().__init__(f"not a tautology; falsified by {shown}")


class ProofFormatError(LogicError, ValueError):
    pass


class SideConditionError(LogicError):
    pass


class FragmentError(LogicError):
    """Input lies outside the fragment an operation accepts."""
