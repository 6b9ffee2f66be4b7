"""Exception hierarchy shared by every module."""

from __future__ import annotations


class WRGError(Exception):
    """Base class for all library errors."""

    code = "error"

    def to_json(self) -> dict:
        return {"error": self.code, "message": str(self)}


class DuplicateId(WRGError):
    code = "DuplicateId"


class DuplicateCoordinate(WRGError):
    code = "DuplicateCoordinate"

    def __init__(self, axis: str, id1: str, id2: str):
        super().__init__(f"points {id1!r} and {id2!r} share their {axis}-coordinate")
        self.axis, self.id1, self.id2 = axis, id1, id2

    def to_json(self) -> dict:
        return {"error": self.code, "axis": self.axis, "ids": [self.id1, self.id2]}


class CoordinateOverflow(WRGError, OverflowError):
    code = "Overflow"


class DegenerateBox(WRGError):
    code = "DegenerateBox"


class DisconnectedInput(WRGError):
    code = "DisconnectedInput"


class InvalidModel(WRGError):
    code = "InvalidModel"


class NotStaircase(WRGError):
    code = "NotStaircase"


class NotTwoComponents(WRGError):
    code = "NotTwoComponents"


class NotCointerval(WRGError):
    code = "NotCointerval"

    def __init__(self, component: int, vertices):
        super().__init__(f"component {component} is not a co-interval graph")
        self.component = component
        self.vertices = sorted(vertices)

    def to_json(self) -> dict:
        return {"error": self.code, "component": self.component, "vertices": self.vertices}


class NotATree(WRGError):
    code = "NotATree"


class TemplateMismatch(WRGError):
    """A triple-free tree did not fit any template. Always a bug."""

    code = "TemplateMismatch"


class RealizationFailed(WRGError):
    """A realizer's self-check failed. Always a bug."""

    code = "RealizationFailed"


class TooFewPoints(WRGError):
    code = "TooFewPoints"


class NotDisjoint(WRGError):
    code = "NotDisjoint"

    def __init__(self, first, second):
        super().__init__(f"boxes {first} and {second} overlap")
        self.pair = (first, second)


class CapExceeded(WRGError):
    code = "CapExceeded"


class BudgetExhausted(WRGError):
    code = "BudgetExhausted"
