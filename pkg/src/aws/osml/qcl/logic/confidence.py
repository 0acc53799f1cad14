#  Copyright 2023-2024 Amazon.com, Inc. or its affiliates.

from typing import Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from aws.osml.qcl.app_config import QclConfig
from aws.osml.qcl.errors import ClampedOutOfSpace


class Confidence(BaseModel):
    """
    A confidence (t, f) in the space C = {t, f in [0,1], t + f <= 1}.

    t is the confidence that a formula holds and f the confidence that it does not hold. Equivalently the pair
    denotes the probability interval [t, 1 - f].

    :param t: true confidence
    :param f: false confidence
    """

    model_config = ConfigDict(frozen=True)

    t: float = Field(ge=0.0, le=1.0)
    f: float = Field(ge=0.0, le=1.0)

    @model_validator(mode="after")
    def _check_space(self) -> "Confidence":
        if self.t + self.f > 1.0 + QclConfig.TOLERANCE:
            raise ValueError(f"confidence ({self.t}, {self.f}) violates t + f <= 1")
        return self

    @classmethod
    def of(cls, t: float, f: float) -> "Confidence":
        return cls(t=t, f=f)

    @property
    def interval(self) -> Tuple[float, float]:
        """
        :return: the probability interval [t, 1 - f] denoted by this confidence
        """
        return self.t, 1.0 - self.f

    @property
    def uncertainty(self) -> float:
        return max(0.0, 1.0 - self.t - self.f)

    def confidence_le(self, other: "Confidence") -> bool:
        """
        The confidence order: other knows at least as much as self, both about truth and about falsity.

        :param other: the confidence to compare to
        :return: True if t <= t' and f <= f'
        """
        return self.t <= other.t and self.f <= other.f

    def truth_le(self, other: "Confidence") -> bool:
        """
        The truth order: other is at least as true as self.

        :param other: the confidence to compare to
        :return: True if t <= t' and f >= f'
        """
        return self.t <= other.t and self.f >= other.f

    def is_close(self, other: "Confidence", tolerance: float = QclConfig.TOLERANCE) -> bool:
        return abs(self.t - other.t) <= tolerance and abs(self.f - other.f) <= tolerance

    def __str__(self) -> str:
        return f"({self.t:.6g}, {self.f:.6g})"


UNKNOWN = Confidence(t=0.0, f=0.0)
CERTAINLY_TRUE = Confidence(t=1.0, f=0.0)
CERTAINLY_FALSE = Confidence(t=0.0, f=1.0)


def clamp(t_raw: float, f_raw: float) -> Confidence:
    """
    Clamp both raw components of a rule output into [0, 1]. Rule arithmetic guarantees the clamped pair lies in C;
    a clamped pair outside C means the arithmetic is wrong.

    :param t_raw: raw true confidence
    :param f_raw: raw false confidence
    :return: the clamped confidence
    :raises ClampedOutOfSpace: if t + f > 1 after clamping
    """
    t = min(max(t_raw, 0.0), 1.0)
    f = min(max(f_raw, 0.0), 1.0)
    if t + f > 1.0 + QclConfig.TOLERANCE:
        raise ClampedOutOfSpace(f"clamped confidence ({t}, {f}) from ({t_raw}, {f_raw}) is outside the confidence space")
    return Confidence(t=t, f=f)
