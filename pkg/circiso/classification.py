from dataclasses import dataclass
import typing


@dataclass(frozen=True)
class PairClassification:
    """Outcome of comparing two connection sets of the same order"""

    def dumps(self) -> str:
        raise NotImplementedError()

    def to_dict(self) -> typing.Dict[str, typing.Any]:
        raise NotImplementedError()

    @property
    def tag(self) -> str:
        return type(self).__name__

    @property
    def label(self) -> str:
        """The short label of the source tables, empty if the pair is not a T1/T2 pair"""
        return ""

    @property
    def isomorphic(self) -> bool:
        return True


@dataclass(frozen=True)
class Identical(PairClassification):
    def dumps(self) -> str:
        return "Identical"

    def to_dict(self):
        return {"tag": self.tag}


@dataclass(frozen=True)
class Type1(PairClassification):
    witness_x: int

    @property
    def label(self) -> str:
        return "T1"

    def dumps(self) -> str:
        return f"Type1 x={self.witness_x}"

    def to_dict(self):
        return {"tag": self.tag, "x": self.witness_x}


FORWARD = "forward"
BACKWARD = "backward"


@dataclass(frozen=True)
class Type2(PairClassification):
    m: int
    witness_t: int
    image_check: bool
    # FORWARD if theta maps the first set onto the second, BACKWARD otherwise
    direction: str = FORWARD

    @property
    def label(self) -> str:
        return "T2"

    def dumps(self) -> str:
        res = f"Type2 m={self.m} t={self.witness_t}"
        if self.direction == BACKWARD:
            res += " (backward)"
        return res

    def to_dict(self):
        return {
            "tag": self.tag,
            "m": self.m,
            "t": self.witness_t,
            "image_check": self.image_check,
            "direction": self.direction,
        }


@dataclass(frozen=True)
class NotIsomorphicByTheseMethods(PairClassification):
    @property
    def isomorphic(self) -> bool:
        return False

    def dumps(self) -> str:
        return "NotIsomorphicByTheseMethods"

    def to_dict(self):
        return {"tag": self.tag}


def classification_from_dict(d: typing.Dict[str, typing.Any]) -> PairClassification:
    tag = d.get("tag")
    if tag == "Identical":
        return Identical()
    if tag == "Type1":
        return Type1(d["x"])
    if tag == "Type2":
        return Type2(d["m"], d["t"], d["image_check"], d.get("direction", FORWARD))
    if tag == "NotIsomorphicByTheseMethods":
        return NotIsomorphicByTheseMethods()
    raise ValueError(f"unknown classification tag {tag!r}")
