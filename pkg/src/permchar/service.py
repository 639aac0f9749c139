"""FastAPI service wrapping the verification engine.

Groups named from the built-in catalog are constructed once and cached for
the lifetime of the process, so repeated verification and dump requests
share tables, lattices, and intersection data.  Inline group documents
(the JSON ingestion schema) are built per request.
"""

from __future__ import annotations

import threading
from typing import Literal, Optional, Union

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import __version__, groups
from .catalog import BUNDLED, DEFAULT_CAPS, RunConfig, dump, run_catalog
from .checks import THEOREM_IDS, verify
from .errors import PermCharError
from .perm import Group

app = FastAPI(
    title="permchar",
    version=__version__,
    description="Exact solvable-group character theory verification service",
)


class GroupDocument(BaseModel):
    """Inline group ingestion schema: 1-based cycles, fixed points omitted."""

    name: str = "group"
    degree: int
    generators: list[list[list[int]]]


class GroupRef(BaseModel):
    name: Optional[str] = None
    inline: Optional[GroupDocument] = None


class Caps(BaseModel):
    order: int = DEFAULT_CAPS["order"]
    subgroup_classes: int = DEFAULT_CAPS["subgroup_classes"]
    seconds_per_group: Optional[float] = None


class VerifyRequest(BaseModel):
    group: GroupRef
    theorems: list[str] = Field(default_factory=lambda: list(THEOREM_IDS))
    caps: Caps = Field(default_factory=Caps)


class ReportModel(BaseModel):
    theorem: str
    group: str
    character: Optional[int]
    status: str
    witness: dict
    seconds: float


class VerifyResponse(BaseModel):
    group: str
    order: int
    reports: list[ReportModel]
    summary: dict[str, int]
    any_fail: bool


class RunConfigModel(BaseModel):
    groups: Optional[list[Union[str, GroupDocument]]] = None
    theorems: Optional[list[str]] = None
    caps: Optional[Caps] = None
    workers: int = 1


class CatalogRunRequest(BaseModel):
    config: Optional[RunConfigModel] = None


class CatalogRunResponse(BaseModel):
    summary: dict
    reports: list[ReportModel]
    any_fail: bool


class DumpRequest(BaseModel):
    kind: Literal["table", "subgroups", "chiefseries", "intersections"]
    group: GroupRef


class DumpResponse(BaseModel):
    kind: str
    document: dict


_group_cache: dict[str, Group] = {}
_group_locks: dict[str, threading.Lock] = {}
_cache_lock = threading.Lock()


def _resolve(ref: GroupRef, cap: int) -> tuple[Group, threading.Lock]:
    if (ref.name is None) == (ref.inline is None):
        raise HTTPException(422, "provide exactly one of group.name or group.inline")
    try:
        if ref.inline is not None:
            G = groups.from_spec(ref.inline.model_dump(), cap=cap)
            return G, threading.Lock()
        with _cache_lock:
            lock = _group_locks.setdefault(ref.name, threading.Lock())
            if ref.name not in _group_cache:
                _group_cache[ref.name] = groups.load_group(ref.name, cap=cap)
            return _group_cache[ref.name], lock
    except PermCharError as exc:
        raise HTTPException(400, str(exc)) from exc


@app.get("/healthz")
def healthz():
    return {"status": "ok", "version": __version__}


@app.get("/catalog")
def catalog_entries():
    return {"entries": [e.as_json() for e in BUNDLED]}


@app.post("/verify", response_model=VerifyResponse)
def verify_endpoint(req: VerifyRequest) -> VerifyResponse:
    G, lock = _resolve(req.group, req.caps.order)
    if G.order > req.caps.order:
        raise HTTPException(400, "group order %d above the cap" % G.order)
    reports = []
    try:
        with lock:
            for tid in req.theorems:
                reports.extend(verify(tid, G))
    except PermCharError as exc:
        raise HTTPException(400, str(exc)) from exc
    payload = [ReportModel(**r.as_json()) for r in reports]
    summary: dict[str, int] = {}
    for r in reports:
        summary[r.status] = summary.get(r.status, 0) + 1
    return VerifyResponse(
        group=G.name,
        order=G.order,
        reports=payload,
        summary=summary,
        any_fail=any(r.status == "Fail" for r in reports),
    )


@app.post("/catalog/run", response_model=CatalogRunResponse)
def catalog_run(req: CatalogRunRequest) -> CatalogRunResponse:
    doc = None
    if req.config is not None:
        doc = req.config.model_dump(exclude_none=True)
        if "groups" in doc:
            doc["groups"] = [
                g if isinstance(g, str) else g for g in doc["groups"]
            ]
    try:
        result = run_catalog(RunConfig.from_json(doc))
    except PermCharError as exc:
        raise HTTPException(400, str(exc)) from exc
    return CatalogRunResponse(
        summary=result.summary(),
        reports=[ReportModel(**r.as_json()) for r in result.reports],
        any_fail=result.any_fail,
    )


@app.post("/dump", response_model=DumpResponse)
def dump_endpoint(req: DumpRequest) -> DumpResponse:
    G, lock = _resolve(req.group, DEFAULT_CAPS["order"])
    try:
        with lock:
            doc = dump(req.kind, G)
    except PermCharError as exc:
        raise HTTPException(400, str(exc)) from exc
    return DumpResponse(kind=req.kind, document=doc)
