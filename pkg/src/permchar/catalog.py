"""Bundled group catalog, batch verification runs, and JSON dumps."""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor

from . import groups
from .characters import character_table
from .checks import FAIL, THEOREM_IDS, Report, verify
from .errors import CapExceeded, ConfigError, ResourceCap
from .intersections import intersections
from .lattice import chief_series, lattice
from .perm import Group


_built_cache: dict = {}
_built_lock = __import__("threading").Lock()


class CatalogEntry:
    def __init__(self, name: str, order: int, tags=()):
        self.name = name
        self.order = order
        self.tags = tuple(tags)

    def build(self, cap: int) -> Group:
        if self.order > cap:
            raise ResourceCap(
                "catalog group %s has order %d above the cap %d"
                % (self.name, self.order, cap)
            )
        with _built_lock:
            G = _built_cache.get(self.name)
            if G is None:
                G = groups.by_name(self.name, cap=cap)
                assert G.order == self.order, "catalog order mismatch"
                _built_cache[self.name] = G
        return G

    def as_json(self):
        return {"name": self.name, "order": self.order, "tags": list(self.tags)}


def catalog_group(name: str) -> Group:
    """The shared instance of a bundled catalog group."""
    for entry in BUNDLED:
        if entry.name == name:
            return entry.build(DEFAULT_CAPS["order"])
    raise ConfigError("%r is not a bundled catalog entry" % name)


def _tags(order, *extra):
    tags = ["solvable"] + list(extra)
    if order % 2 == 1:
        tags.append("odd-order")
    return tags


BUNDLED = [
    CatalogEntry("cyclic(%d)" % n, n, _tags(n, "abelian"))
    for n in (2, 3, 4, 5, 6, 8, 9, 12, 15, 16, 24, 36, 48)
] + [
    CatalogEntry("abelian(2,2)", 4, _tags(4, "abelian")),
    CatalogEntry("abelian(2,4)", 8, _tags(8, "abelian")),
    CatalogEntry("abelian(2,2,2)", 8, _tags(8, "abelian")),
    CatalogEntry("abelian(3,3)", 9, _tags(9, "abelian")),
    CatalogEntry("abelian(2,6)", 12, _tags(12, "abelian")),
    CatalogEntry("abelian(5,5)", 25, _tags(25, "abelian")),
    CatalogEntry("abelian(4,4)", 16, _tags(16, "abelian")),
    CatalogEntry("abelian(2,2,12)", 48, _tags(48, "abelian")),
    CatalogEntry("dihedral(6)", 6, _tags(6)),
    CatalogEntry("dihedral(10)", 10, _tags(10)),
    CatalogEntry("frobenius(7,3)", 21, _tags(21)),
    CatalogEntry("frobenius(11,5)", 55, _tags(55)),
    CatalogEntry("frobenius(13,3)", 39, _tags(39)),
    CatalogEntry("extraspecial(3)", 27, _tags(27)),
    CatalogEntry("extraspecial(5)", 125, _tags(125)),
    CatalogEntry("fullyramified(5,3)", 375, _tags(375)),
    CatalogEntry("fullyramified(11,3)", 3993, _tags(3993)),
    CatalogEntry("gl23", 48, _tags(48)),
    CatalogEntry("product(fullyramified(5,3),cyclic(5))", 1875, _tags(1875)),
    CatalogEntry("product(fullyramified(5,3),cyclic(7))", 2625, _tags(2625)),
]

DEFAULT_CAPS = {
    "order": 5000,
    "subgroup_classes": 5000,
    "seconds_per_group": None,
}


class RunConfig:
    def __init__(self, groups_spec=None, theorems=None, caps=None, workers=1):
        self.groups_spec = groups_spec
        self.theorems = list(theorems) if theorems else list(THEOREM_IDS)
        for t in self.theorems:
            if t not in THEOREM_IDS:
                raise ConfigError("unknown theorem id %r" % t)
        merged = dict(DEFAULT_CAPS)
        merged.update(caps or {})
        self.caps = merged
        self.workers = max(1, int(workers))

    @staticmethod
    def from_json(doc) -> "RunConfig":
        if doc is None:
            return RunConfig()
        if not isinstance(doc, dict):
            raise ConfigError("config must be a JSON object")
        unknown = set(doc) - {"groups", "theorems", "caps", "workers"}
        if unknown:
            raise ConfigError("unknown config keys: %s" % sorted(unknown))
        return RunConfig(
            groups_spec=doc.get("groups"),
            theorems=doc.get("theorems"),
            caps=doc.get("caps"),
            workers=doc.get("workers", 1),
        )


class RunResult:
    def __init__(self, reports: list[Report], warnings=()):
        self.reports = reports
        self.warnings = list(warnings)

    @property
    def any_fail(self) -> bool:
        return any(r.status == FAIL for r in self.reports)

    @property
    def exit_code(self) -> int:
        return 1 if self.any_fail else 0

    def summary(self) -> dict:
        by_status: dict = {}
        by_theorem: dict = {}
        for r in self.reports:
            by_status[r.status] = by_status.get(r.status, 0) + 1
            slot = by_theorem.setdefault(r.theorem, {})
            slot[r.status] = slot.get(r.status, 0) + 1
        return {
            "reports": len(self.reports),
            "by_status": by_status,
            "by_theorem": by_theorem,
            "any_fail": self.any_fail,
            "warnings": self.warnings,
        }

    def write_ndjson(self, path):
        with open(path, "w") as fh:
            for r in self.reports:
                fh.write(json.dumps(r.as_json()) + "\n")


def _resolve_group(spec, cap: int) -> Group:
    try:
        if isinstance(spec, CatalogEntry):
            return spec.build(cap)
        G = groups.load_group(spec, cap=cap)
    except CapExceeded as exc:
        raise ResourceCap(str(exc)) from exc
    if G.order > cap:
        raise ResourceCap("group order %d above the cap %d" % (G.order, cap))
    return G


def _run_group(spec, theorems, caps) -> tuple[list[Report], list[str]]:
    G = _resolve_group(spec, caps["order"])
    lattice(G, class_cap=caps["subgroup_classes"])
    budget = caps.get("seconds_per_group")
    reports, warnings = [], []
    t0 = time.perf_counter()
    for tid in theorems:
        reports.extend(verify(tid, G))
        if budget is not None and time.perf_counter() - t0 > budget:
            warnings.append(
                "%s: per-group budget of %.1fs exhausted after %s"
                % (G.name, budget, tid)
            )
            break
    return reports, warnings


def run_catalog(config: RunConfig | dict | None = None) -> RunResult:
    """Run the configured theorem set over the configured groups.

    Groups run concurrently; reports are merged in configuration order so
    the output is deterministic regardless of completion order.
    """
    if not isinstance(config, RunConfig):
        config = RunConfig.from_json(config)
    specs = config.groups_spec if config.groups_spec is not None else BUNDLED
    if not specs:
        return RunResult([])
    results = [None] * len(specs)
    with ThreadPoolExecutor(max_workers=config.workers) as pool:
        futures = [
            pool.submit(_run_group, spec, config.theorems, config.caps)
            for spec in specs
        ]
        for i, fut in enumerate(futures):
            results[i] = fut.result()
    reports, warnings = [], []
    for reps, warns in results:
        reports.extend(reps)
        warnings.extend(warns)
    return RunResult(reports, warnings)


DUMP_KINDS = ("table", "subgroups", "chiefseries", "intersections")


def dump(kind: str, G: Group) -> dict:
    """JSON documents for the CLI-facing dump surface."""
    if kind == "table":
        return character_table(G).as_json()
    if kind == "subgroups":
        lat = lattice(G)
        return {
            "group": G.name,
            "order": G.order,
            "classes": [
                {
                    "id": cls.id,
                    "order": cls.order,
                    "class_size": cls.size,
                    "representative_generators": cls.rep.generator_cycle_strings(),
                }
                for cls in lat.classes
            ],
        }
    if kind == "chiefseries":
        series = chief_series(G)
        return {
            "group": G.name,
            "orders": [s.order for s in series.chain],
            "factor_orders": series.factor_orders(),
        }
    if kind == "intersections":
        ctx = intersections(G)
        return {
            "group": G.name,
            "complete": [w.as_json() for w in ctx.complete],
        }
    raise ConfigError("unknown dump kind %r; valid: %s" % (kind, ", ".join(DUMP_KINDS)))
