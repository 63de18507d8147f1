from __future__ import annotations


class CubicSoftSetError(ValueError):
    """Base class for every domain error raised by this package."""


class MalformedDocument(CubicSoftSetError):
    pass


class MalformedNumber(CubicSoftSetError):
    def __init__(self, text: object, where: str | None = None):
        self.text = text
        self.where = where
        msg = f"malformed number {text!r}"
        if where:
            msg += f" at {where}"
        super().__init__(msg)


class OutOfUnitRange(CubicSoftSetError):
    def __init__(self, text: object, where: str | None = None):
        self.text = text
        self.where = where
        msg = f"value {text} is outside [0,1]"
        if where:
            msg += f" at {where}"
        super().__init__(msg)


class InvertedInterval(CubicSoftSetError):
    def __init__(self, lo, hi, where: str | None = None):
        self.lo = lo
        self.hi = hi
        self.where = where
        msg = f"inverted interval [{lo},{hi}]"
        if where:
            msg += f" at {where}"
        super().__init__(msg)


class MissingGrade(CubicSoftSetError):
    def __init__(self, param, element):
        self.param = param
        self.element = element
        super().__init__(f"missing grade at ({param}, {element})")


class DuplicateParameter(CubicSoftSetError):
    def __init__(self, param):
        self.param = param
        super().__init__(f"duplicate parameter {param}")


class DuplicateElement(CubicSoftSetError):
    def __init__(self, element):
        self.element = element
        super().__init__(f"duplicate universe element {element!r}")


class UniverseMismatch(CubicSoftSetError):
    def __init__(self, left, right):
        self.left = tuple(left)
        self.right = tuple(right)
        super().__init__(f"universe mismatch: {list(self.left)} vs {list(self.right)}")


class ParameterSetMismatch(CubicSoftSetError):
    def __init__(self, left, right):
        self.left = tuple(left)
        self.right = tuple(right)
        super().__init__(
            "parameter set mismatch: "
            f"[{', '.join(map(str, self.left))}] vs [{', '.join(map(str, self.right))}]"
        )


class NotBothInternalExternal(CubicSoftSetError):
    pass


class CampaignTooLarge(CubicSoftSetError):
    def __init__(self, size: int, cap: int):
        self.size = size
        self.cap = cap
        super().__init__(f"campaign needs {size} instances, cap is {cap}")
