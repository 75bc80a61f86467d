"""File and wire formats: explicit-matroid JSON, presentation files and the
evidence table.
"""

import csv
import io
from pathlib import Path
from typing import Any, List, Sequence, Union

from pydantic import BaseModel, ConfigDict, Field

from services.lattice.domain.entities import EvidenceRow, ExplicitMatroid
from services.lattice.domain.oracle import make_matroid

EVIDENCE_HEADER = ("sample_id", "size", "square_width", "max_antichain", "longest_chain")


class ExplicitMatroidModel(BaseModel):
    """JSON form of an explicit matroid: 1-based labels, sorted bases."""

    model_config = ConfigDict(
        extra="forbid",
        json_schema_extra={"example": {"n": 4, "bases": [[1, 2], [1, 3], [2, 3]]}},
    )

    n: int = Field(ge=0, description="Ground set size")
    bases: List[List[int]] = Field(min_length=1, description="Basis family")

    def to_matroid(self) -> ExplicitMatroid:
        return make_matroid(self.n, self.bases)

    @classmethod
    def from_matroid(cls, matroid: ExplicitMatroid) -> "ExplicitMatroidModel":
        return cls(n=matroid.ground_size, bases=[list(basis) for basis in matroid.bases])


def load_matroid(data: Union[str, bytes, dict]) -> ExplicitMatroid:
    """Explicit matroid from a JSON document or an already-decoded object."""
    if isinstance(data, (str, bytes)):
        return ExplicitMatroidModel.model_validate_json(data).to_matroid()
    return ExplicitMatroidModel.model_validate(data).to_matroid()


def dump_matroid(matroid: ExplicitMatroid) -> str:
    return ExplicitMatroidModel.from_matroid(matroid).model_dump_json() + "\n"


def read_text(path: Union[str, Path]) -> str:
    return Path(path).read_text(encoding="utf-8")


def write_text(path: Union[str, Path], text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")


def evidence_tsv(rows: Sequence[Union[EvidenceRow, Sequence[Any]]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, delimiter="\t", lineterminator="\n")
    writer.writerow(EVIDENCE_HEADER)
    for row in rows:
        writer.writerow(row.as_tuple() if isinstance(row, EvidenceRow) else row)
    return buffer.getvalue()
