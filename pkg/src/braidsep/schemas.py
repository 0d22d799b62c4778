"""Request and response models for the HTTP service and the CLI.

Every scalar crosses the wire in the "a+br" text syntax of
:func:`braidsep.field.render`, and every matrix as the rows/cols/entries
object of :meth:`braidsep.linalg.ExactMatrix.to_json_dict`, so all payloads
re-parse exactly through the library readers.
"""

from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator


class Matrix(BaseModel):
    """Wire form of an exact matrix; mirrors ExactMatrix.to_json_dict."""

    rows: int = Field(ge=1)
    cols: int = Field(ge=1)
    entries: list[list[str]]


# ---------------------------------------------------------------------------
# components
# ---------------------------------------------------------------------------

class ComponentsRequest(BaseModel):
    n: int = Field(ge=1, description="total dimension of the representations")


class ComponentRow(BaseModel):
    name: Optional[str] = None  # catalog label when the row has one (6..11)
    beta: list[int]
    n: int
    dim_gamma: int
    dim_b3: int
    mirror_of: Optional[list[int]] = None


class ComponentsResponse(BaseModel):
    n: int
    rows: list[ComponentRow]


# ---------------------------------------------------------------------------
# family
# ---------------------------------------------------------------------------

class FamilyRequest(BaseModel):
    """Specialize a catalog family (`type_code`) or a generic chart (`alpha`).

    Bind parameters explicitly through `params` and `lam`, or set `random`
    to draw every unbound parameter and the scalar from `seed`.
    """

    model_config = ConfigDict(populate_by_name=True)

    type_code: Optional[str] = None
    alpha: Optional[list[int]] = None
    params: dict[str, str] = Field(default_factory=dict)
    lam: Optional[str] = Field(default=None, alias="lambda")
    random: bool = False
    seed: int = 0
    low: int = 1
    high: int = 1000

    @field_validator("alpha")
    @classmethod
    def _six_entries(cls, value):
        if value is not None and len(value) != 6:
            raise ValueError("alpha must have exactly 6 entries")
        return value


class FamilyResponse(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    type_code: Optional[str]
    source: str  # "printed" | "code" | "generic"
    code: Optional[str]
    alpha: list[int]
    beta: list[int]
    n: int
    free_params: list[str]
    bindings: dict[str, str]
    lam: str = Field(alias="lambda")
    b: Matrix
    sigma1: Matrix
    sigma2: Matrix


# ---------------------------------------------------------------------------
# separate
# ---------------------------------------------------------------------------

class SeparateRequest(BaseModel):
    braid: str
    component: str
    trials: int = Field(default=100, ge=1)
    seed: int = 0
    low: int = 1
    high: int = 1000


class Witness(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    bindings: dict[str, str]
    lam: str = Field(alias="lambda")
    trace_word: str
    trace_reversed: str


class SeparateResponse(BaseModel):
    braid: str  # normalized form of the word that was tested
    component: str
    status: str  # "SEPARATED" | "INDISTINGUISHABLE_PROBABLE"
    trials: int
    witness: Optional[Witness] = None
    explanation: str


# ---------------------------------------------------------------------------
# knots sweep
# ---------------------------------------------------------------------------

class KnotEntryIn(BaseModel):
    name: str = Field(min_length=1)
    braid: str
    crossings: int = Field(ge=0)
    source: str = ""


class SweepRequest(BaseModel):
    component: str
    trials: int = Field(default=100, ge=1)
    seed: int = 0
    low: int = 1
    high: int = 1000
    knots: Optional[list[KnotEntryIn]] = None  # None selects the bundled table


class SweepRow(BaseModel):
    name: str
    crossings: int
    braid: str
    status: str
    trials: int
    witness: Optional[Witness] = None


class SweepResponse(BaseModel):
    component: str
    rows: list[SweepRow]


# ---------------------------------------------------------------------------
# selftest
# ---------------------------------------------------------------------------

class SelftestCheck(BaseModel):
    name: str
    ok: bool
    detail: str


class SelftestResponse(BaseModel):
    ok: bool
    checks: list[SelftestCheck]
