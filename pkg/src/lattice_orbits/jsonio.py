"""JSON views of the public types.

Document layouts are part of the CLI contract and are frozen by golden tests:
key order is fixed, values are plain ints/strings/bools, and every document
round-trips byte-identically through json.dumps. Schemas for each document
live in docs/schemas/.
"""

from __future__ import annotations

from .dilatation import HalfVector
from .errors import UnknownLattice
from .isometries import Isometry, certify
from .lattices import Lattice, resolve
from .orbits import ClassificationReport, HeegnerReport, WitnessResult
from .oracle import BoxScan, ConnectivityReport, SuiteResult
from .vectors import LatticeVector


def _int_list(values, what: str) -> tuple[int, ...]:
    out = []
    for x in values:
        if not isinstance(x, int) or isinstance(x, bool):
            raise ValueError(f"{what} must be integers, got {x!r}")
        out.append(x)
    return tuple(out)


def lattice_to_json(lattice: Lattice) -> dict:
    return {
        "name": lattice.name,
        "rank": lattice.rank,
        "gram": [list(row) for row in lattice.gram],
    }


def lattice_ref(lattice: Lattice):
    """Name when the registry resolves it back, inline document otherwise."""
    try:
        if resolve(lattice.name) == lattice:
            return lattice.name
    except UnknownLattice:
        pass
    return lattice_to_json(lattice)


def lattice_from_ref(ref) -> Lattice:
    if isinstance(ref, str):
        return resolve(ref)
    if isinstance(ref, dict):
        gram = tuple(tuple(_int_list(row, "gram entries")) for row in ref["gram"])
        return Lattice(str(ref["name"]), int(ref["rank"]), gram)
    raise ValueError("lattice reference must be a name or an inline document")


def vector_to_json(v: LatticeVector) -> dict:
    return {"lattice": lattice_ref(v.lattice), "coords": list(v.coords)}


def vector_from_json(doc: dict) -> LatticeVector:
    return LatticeVector(lattice_from_ref(doc["lattice"]), _int_list(doc["coords"], "coords"))


def half_to_json(h: HalfVector) -> dict:
    return {"base": h.base.name, "doubled_coords": list(h.doubled_coords)}


def half_from_json(doc: dict) -> HalfVector:
    base = resolve(str(doc["base"]))
    return HalfVector(base, _int_list(doc["doubled_coords"], "doubled_coords"))


def isometry_to_json(g: Isometry) -> dict:
    return {"lattice": lattice_ref(g.lattice), "matrix": [list(row) for row in g.matrix]}


def isometry_from_json(doc: dict) -> Isometry:
    lattice = lattice_from_ref(doc["lattice"])
    rows = [_int_list(row, "matrix entries") for row in doc["matrix"]]
    return certify(lattice, rows)  # refuses anything that is not an isometry


def classification_to_json(report: ClassificationReport) -> dict:
    return {
        "coords": list(report.vector.coords),
        "norm": report.norm,
        "n": report.n,
        "primitive": report.primitive,
        "type": report.vtype.value,
        "phi_integral": report.phi_integral,
        "label": report.label.value,
    }


def heegner_to_json(report: HeegnerReport) -> dict:
    return {
        "n": report.n,
        "norm": report.norm,
        "component_count": len(report.components),
        "components": [
            {"label": comp.label.value, "representative": vector_to_json(comp.representative)}
            for comp in report.components
        ],
    }


def witness_to_json(v: LatticeVector, result: WitnessResult, norm: int) -> dict:
    return {
        "vector": vector_to_json(v),
        "norm": norm,
        "n": norm // 2,
        "witness": None if result.witness is None else vector_to_json(result.witness),
        "parity_obstruction": result.parity_obstruction,
        "bound": result.bound,
    }


def scan_to_json(scan: BoxScan) -> dict:
    return {
        "lattice": lattice_ref(scan.lattice),
        "bound": scan.bound,
        "norm": scan.norm,
        "count": len(scan.vectors),
        "vectors": [list(v.coords) for v in scan.vectors],
    }


def suite_to_json(result: SuiteResult) -> dict:
    return {
        "suite": result.suite,
        "status": result.status,
        "counterexample": result.counterexample,
        "stats": result.stats,
    }


def connectivity_to_suite(report: ConnectivityReport, seed: int, walks: int, word_length: int) -> SuiteResult:
    """Wrap a connectivity report in the common suite envelope."""
    status = "pass" if report.mixed_label_components == 0 else "fail"
    stats = {
        "lattice": report.lattice.name,
        "norm": report.norm,
        "n": report.norm // 2,
        "bound": report.bound,
        "seed": seed,
        "walks": walks,
        "word_length": word_length,
        "vectors": sum(c.size for c in report.components),
        "component_count": len(report.components),
        "mixed_label_components": report.mixed_label_components,
        "edges_applied": report.edges_applied,
        "edges_kept": report.edges_kept,
        "components": [
            {
                "size": c.size,
                "labels_present": list(c.labels_present),
                "contains_representative": c.contains_representative,
            }
            for c in report.components
        ],
    }
    counterexample = None
    if status == "fail":
        counterexample = {"mixed_label_components": report.mixed_label_components}
    return SuiteResult("connectivity", status, counterexample, stats)
