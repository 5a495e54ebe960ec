from typing import List, Literal, Optional

from pydantic import BaseModel, Field, model_validator

from .certificates import GrowingSuffixCert, SplittableCert
from .patterns import DisjointFamily

FarStyle = Literal["blocks", "staircase", "splittable", "suffix"]
FreeStyle = Literal["free-interleave", "free-concat"]
Style = Literal["blocks", "staircase", "splittable", "suffix", "free-interleave", "free-concat"]

FAR_STYLES = ("blocks", "staircase", "splittable", "suffix")
FREE_STYLES = ("free-interleave", "free-concat")


class InstanceSpec(BaseModel):
    """What to generate: a style, a length, a pattern length and a seed."""

    style: Style
    n: int = Field(ge=1)
    k: int = Field(ge=1)
    eps: Optional[float] = Field(default=None, gt=0, le=1)
    seed: int = 0

    model_config = {"extra": "forbid", "frozen": True}

    @model_validator(mode="after")
    def _check_shape(self) -> "InstanceSpec":
        if self.n < self.k:
            raise ValueError(f"n={self.n} must be at least k={self.k}")
        if self.is_far and self.eps is None:
            raise ValueError(f"style {self.style!r} needs eps")
        if not self.is_far and self.k < 2:
            raise ValueError("free styles need k >= 2")
        return self

    @property
    def is_far(self) -> bool:
        return self.style in FAR_STYLES


class CertifiedInstance(BaseModel):
    """Values plus the certificate that makes them trustworthy test input.

    Far styles carry `family` (at least ceil(eps*n) disjoint k-patterns);
    free styles carry `free_proof` (a partition of all positions into k-1
    non-increasing subsequences). `split` and `growth` add the structural
    certificate of the splittable and staircase layouts when one applies.
    """

    spec: InstanceSpec
    values: List[float]
    family: Optional[DisjointFamily] = None
    free_proof: Optional[List[List[int]]] = None
    split: Optional[SplittableCert] = None
    growth: Optional[GrowingSuffixCert] = None

    model_config = {"extra": "forbid"}

    def certificate(self) -> dict:
        """The sidecar JSON document: InstanceSpec fields plus family or free proof."""
        doc = {
            "style": self.spec.style,
            "n": self.spec.n,
            "k": self.spec.k,
            "eps": self.spec.eps,
            "seed": self.spec.seed,
        }
        if self.family is not None:
            doc["family"] = [list(w.indices) for w in self.family.tuples]
        if self.free_proof is not None:
            doc["free_proof"] = self.free_proof
        if self.split is not None:
            doc["split"] = self.split.model_dump(mode="json")
        if self.growth is not None:
            doc["growth"] = self.growth.model_dump(mode="json")
        return doc
