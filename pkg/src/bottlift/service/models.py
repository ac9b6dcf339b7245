"""Request models for the compute service.

Every command validates its flag combination here, before any computation
runs.  Responses are plain dicts in the fixed envelope
{schema, command, inputs, results} so the byte layout of the JSON output is
stable across runs (see bottlift.service.app.envelope).
"""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class CommandResponse(BaseModel):
    """The fixed response envelope; `schema` is the wire-format version."""

    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(default=1, alias="schema")
    command: str
    inputs: dict
    results: dict


class NewtonRequest(BaseModel):
    m: int = Field(ge=1)


class PowerSumRequest(BaseModel):
    m: int = Field(ge=1)


class BottRequest(BaseModel):
    m: int = Field(ge=1)
    iterate: Literal[1, 2] = 1


class MapTableRequest(BaseModel):
    max_m: int = Field(default=12, ge=1)


def _require_even(value: int) -> int:
    if value % 2 != 0:
        raise ValueError("max_degree must be even")
    return value


class RanksRequest(BaseModel):
    n: Literal[2, 4]
    max_degree: int = Field(default=40, ge=0)

    _even = field_validator("max_degree")(_require_even)


class CoefficientsSpec(BaseModel):
    """Either a builtin name (MU, sl1MU, Z_even_shift(d)) or a file document."""

    builtin: str | None = None
    text: str | None = None

    @model_validator(mode="after")
    def _exactly_one(self) -> "CoefficientsSpec":
        if (self.builtin is None) == (self.text is None):
            raise ValueError("give exactly one of builtin/text")
        return self


class Pi0Request(BaseModel):
    n: Literal[2, 4]
    coeffs: CoefficientsSpec
    max_degree: int = Field(default=40, ge=0)

    _even = field_validator("max_degree")(_require_even)


class IndexTableRequest(BaseModel):
    n: Literal[2, 4]
    max_m: int = Field(default=12, ge=1)


class ObstructRequest(BaseModel):
    n: Literal[2, 4]
    coeffs: CoefficientsSpec
    coordinate_text: str
