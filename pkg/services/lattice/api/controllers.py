import os
from typing import Any, Dict, List, Mapping

import yaml

from services.lattice.domain.entities import ExplicitMatroid, MinorWitness, PathPresentation
from services.lattice.domain.minors import parse_witness
from services.lattice.domain.presentation import parse_presentation
from services.lattice.domain.use_cases import (
    MinorUseCase,
    OracleUseCase,
    PosetUseCase,
    PresentationUseCase,
    SquareUseCase,
)
from services.lattice.infrastructure.formats import load_matroid
from services.lattice.infrastructure.rendering import render

Arguments = Mapping[str, Any]


def presentation_arg(arguments: Arguments, key: str = "presentation") -> PathPresentation:
    return parse_presentation(str(arguments[key]))


def witness_arg(arguments: Arguments, key: str = "witness") -> MinorWitness:
    value = arguments.get(key) or ""
    if isinstance(value, list):
        value = "\n".join(str(step) for step in value)
    return parse_witness(str(value))


def matroid_arg(arguments: Arguments, key: str = "matroid") -> ExplicitMatroid:
    return load_matroid(arguments[key])


def int_arg(arguments: Arguments, key: str) -> int:
    return int(arguments[key])


class PresentationController:
    """Controller for single-presentation tools."""

    def __init__(self):
        self.use_case = PresentationUseCase()

    def info(self, arguments: Arguments) -> Dict[str, Any]:
        return self.use_case.info(presentation_arg(arguments))

    def validate(self, arguments: Arguments) -> Dict[str, Any]:
        return self.use_case.validate(presentation_arg(arguments))

    def bases(self, arguments: Arguments) -> Dict[str, Any]:
        cap = arguments.get("cap")
        return self.use_case.bases(
            presentation_arg(arguments),
            cap=None if cap is None else int(cap),
            count_only=bool(arguments.get("count_only", False)),
        )

    def dual(self, arguments: Arguments) -> Dict[str, Any]:
        return self.use_case.dual(presentation_arg(arguments))

    def direct_sum(self, arguments: Arguments) -> Dict[str, Any]:
        return self.use_case.direct_sum(
            presentation_arg(arguments, "first"), presentation_arg(arguments, "second")
        )

    def render(self, arguments: Arguments) -> Dict[str, Any]:
        square = arguments.get("square")
        pres = presentation_arg(arguments)
        return {"grid": render(pres, None if square is None else int(square))}


class MinorController:
    """Controller for deletion, contraction and containment tools."""

    def __init__(self):
        self.use_case = MinorUseCase()

    def delete(self, arguments: Arguments) -> Dict[str, Any]:
        return self.use_case.delete(presentation_arg(arguments), int_arg(arguments, "label"))

    def contract(self, arguments: Arguments) -> Dict[str, Any]:
        return self.use_case.contract(presentation_arg(arguments), int_arg(arguments, "label"))

    def apply_witness(self, arguments: Arguments) -> Dict[str, Any]:
        return self.use_case.apply_witness(presentation_arg(arguments), witness_arg(arguments))

    def is_minor(self, arguments: Arguments) -> Dict[str, Any]:
        return self.use_case.is_minor(
            presentation_arg(arguments, "small"), presentation_arg(arguments, "large")
        )

    def uniform_minor(self, arguments: Arguments) -> Dict[str, Any]:
        return self.use_case.uniform_minor(presentation_arg(arguments), int_arg(arguments, "k"))


class SquareController:
    """Controller for square tools."""

    def __init__(self):
        self.use_case = SquareUseCase()

    def squares(self, arguments: Arguments) -> Dict[str, Any]:
        return self.use_case.squares(presentation_arg(arguments))

    def pull(self, arguments: Arguments) -> Dict[str, Any]:
        return self.use_case.pull(presentation_arg(arguments), int_arg(arguments, "position"))

    def glue(self, arguments: Arguments) -> Dict[str, Any]:
        return self.use_case.glue(
            presentation_arg(arguments, "bottom"),
            presentation_arg(arguments, "top"),
            int_arg(arguments, "k"),
        )

    def check_glue_minor(self, arguments: Arguments) -> Dict[str, Any]:
        return self.use_case.check_glue_minor(
            presentation_arg(arguments),
            int_arg(arguments, "position"),
            witness_arg(arguments, "bottom_witness"),
            witness_arg(arguments, "top_witness"),
        )


class OracleController:
    """Controller for explicit-matroid tools."""

    def __init__(self):
        self.use_case = OracleUseCase()

    def gen(self, arguments: Arguments) -> Dict[str, Any]:
        return self.use_case.family(str(arguments["family"]), int_arg(arguments, "n"))

    def branch_width(self, arguments: Arguments) -> Dict[str, Any]:
        return self.use_case.branch_width(matroid_arg(arguments))

    def isomorphic(self, arguments: Arguments) -> Dict[str, Any]:
        return self.use_case.isomorphic(matroid_arg(arguments, "first"), matroid_arg(arguments, "second"))

    def oracle_minor(self, arguments: Arguments) -> Dict[str, Any]:
        return self.use_case.oracle_minor(matroid_arg(arguments, "small"), matroid_arg(arguments, "large"))

    def find_presentation(self, arguments: Arguments) -> Dict[str, Any]:
        return self.use_case.find_presentation(matroid_arg(arguments))


class PosetController:
    """Controller for poset tools."""

    def __init__(self):
        self.use_case = PosetUseCase()

    def antichain(self, arguments: Arguments) -> Dict[str, Any]:
        if "matroids" in arguments:
            matroids: List[ExplicitMatroid] = [load_matroid(item) for item in arguments["matroids"]]
            return self.use_case.oracle_antichain(matroids)
        items = [parse_presentation(str(text)) for text in arguments["items"]]
        return self.use_case.antichain(items)

    def base_case(self, arguments: Arguments) -> Dict[str, Any]:
        return self.use_case.base_case(
            presentation_arg(arguments, "first"), presentation_arg(arguments, "second")
        )


class HealthController:
    """Controller for health-related endpoints."""

    def get_health(self) -> Dict[str, Any]:
        """Get the health status of the service."""
        return {
            "status": "healthy",
            "message": "Service is running"
        }


class InfoController:
    """Controller for info-related endpoints."""

    def get_info(self) -> Dict[str, Any]:
        """Get information about the service."""
        config_path = os.path.join(os.path.dirname(os.path.dirname(__file__)), "mcp_tool.yaml")
        with open(config_path, "r") as f:
            mcp_config = yaml.safe_load(f)

        return {
            "name": mcp_config.get("name", "lattice-path-matroids"),
            "version": mcp_config.get("version", "0.1.0"),
            "description": mcp_config.get("description", ""),
            "tools": mcp_config.get("tools", []),
            "resources": mcp_config.get("resources", [])
        }
