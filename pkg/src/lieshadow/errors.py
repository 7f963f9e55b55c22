"""Exception types raised by lieshadow."""


class LieShadowError(Exception):
    pass


class DomainError(LieShadowError, ValueError):
    """An argument lies outside the domain of the operation."""


class BoundError(DomainError):
    """A bracket expression is longer than the basis table it is reduced against."""

    def __init__(self, length, max_len):
        self.length = length
        self.max_len = max_len
        super().__init__(f"monomial of length {length} exceeds table max_len {max_len}")


class ParseError(LieShadowError, ValueError):
    def __init__(self, message, text, position):
        self.text = text
        self.position = position
        where = "end of input" if position >= len(text) else f"position {position}"
        super().__init__(f"{message} at {where} in {text!r}")
