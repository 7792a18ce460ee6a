class DivmonError(Exception):
    """Base class for errors raised by this package."""


class PresentationSyntaxError(DivmonError, ValueError):
    def __init__(self, message: str, line: int):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


class OracleLimitError(DivmonError):
    """A brute-force computation exceeded its configured class-size or length cap."""


class NotADivisibilityMonoid(DivmonError):
    """A uniqueness property of left divisibility monoids failed at runtime."""


class NotADivisor(DivmonError, ValueError):
    pass


class MachineFormatError(DivmonError, ValueError):
    def __init__(self, message: str, line: int = 0):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)
