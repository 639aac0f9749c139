"""Thin command-line client for the verification service.

Every subcommand speaks the HTTP API: against a remote server when --url is
given, otherwise against an in-process instance of the FastAPI app.

Exit codes: 0 when no check failed, 1 when any Fail was reported, 2 on
usage or configuration errors.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import sys
from pathlib import Path

import httpx


def _group_ref(spec: str) -> dict:
    path = Path(spec)
    if path.suffix == ".json" or path.is_file():
        try:
            doc = json.loads(path.read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise SystemExit2("cannot read group file %s: %s" % (spec, exc))
        return {"inline": doc}
    return {"name": spec}


class SystemExit2(Exception):
    pass


async def _post(url_base, path, payload):
    if url_base:
        async with httpx.AsyncClient(base_url=url_base, timeout=None) as client:
            resp = await client.post(path, json=payload)
    else:
        from .service import app

        transport = httpx.ASGITransport(app=app)
        async with httpx.AsyncClient(
            transport=transport, base_url="http://service", timeout=None
        ) as client:
            resp = await client.post(path, json=payload)
    if resp.status_code >= 400:
        detail = resp.json().get("detail", resp.text)
        raise SystemExit2("service error: %s" % detail)
    return resp.json()


def _print_summary(reports):
    lines = {}
    for r in reports:
        key = (r["group"], r["theorem"])
        slot = lines.setdefault(key, {})
        slot[r["status"]] = slot.get(r["status"], 0) + 1
    width = max((len(g) for g, _ in lines), default=10)
    for (g, t), counts in lines.items():
        cells = "  ".join("%s=%d" % (s, n) for s, n in sorted(counts.items()))
        print("%-*s  %-3s %s" % (width, g, t, cells))
    total = {}
    for r in reports:
        total[r["status"]] = total.get(r["status"], 0) + 1
    print("total:", "  ".join("%s=%d" % (s, n) for s, n in sorted(total.items())))


def _write_ndjson(path, reports):
    with open(path, "w") as fh:
        for r in reports:
            fh.write(json.dumps(r) + "\n")


def cmd_verify(args) -> int:
    payload = {"group": _group_ref(args.group)}
    if args.theorems:
        payload["theorems"] = [t.strip() for t in args.theorems.split(",") if t.strip()]
    doc = asyncio.run(_post(args.url, "/verify", payload))
    _print_summary(doc["reports"])
    if args.json:
        _write_ndjson(args.json, doc["reports"])
    return 1 if doc["any_fail"] else 0


def cmd_catalog_run(args) -> int:
    payload = {}
    if args.config:
        try:
            payload["config"] = json.loads(Path(args.config).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise SystemExit2("cannot read config %s: %s" % (args.config, exc))
    doc = asyncio.run(_post(args.url, "/catalog/run", payload))
    _print_summary(doc["reports"])
    for warning in doc["summary"].get("warnings", []):
        print("warning:", warning, file=sys.stderr)
    if args.json:
        _write_ndjson(args.json, doc["reports"])
    return 1 if doc["any_fail"] else 0


def cmd_dump(args) -> int:
    payload = {"kind": args.kind, "group": _group_ref(args.group)}
    doc = asyncio.run(_post(args.url, "/dump", payload))
    text = json.dumps(doc["document"], indent=2)
    if args.out:
        Path(args.out).write_text(text + "\n")
    else:
        print(text)
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    uvicorn.run("permchar.service:app", host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permchar",
        description="exact character-theory verification for solvable groups",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run checks on one group")
    p.add_argument("--group", required=True, help="builtin name or JSON file")
    p.add_argument("--theorems", help="comma-separated check ids (default: all)")
    p.add_argument("--json", help="write reports as line-delimited JSON")
    p.add_argument("--url", help="remote service URL (default: in-process)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("catalog", help="catalog operations")
    csub = p.add_subparsers(dest="catalog_command", required=True)
    run = csub.add_parser("run", help="verify the bundled or configured catalog")
    run.add_argument("--config", help="JSON config: groups, theorems, caps, workers")
    run.add_argument("--json", help="write reports as line-delimited JSON")
    run.add_argument("--url", help="remote service URL (default: in-process)")
    run.set_defaults(func=cmd_catalog_run)

    p = sub.add_parser("dump", help="emit analysis documents")
    p.add_argument(
        "--kind",
        required=True,
        choices=["table", "subgroups", "chiefseries", "intersections"],
    )
    p.add_argument("--group", required=True)
    p.add_argument("--out", help="output file (default: stdout)")
    p.add_argument("--url", help="remote service URL (default: in-process)")
    p.set_defaults(func=cmd_dump)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except SystemExit2 as exc:
        print("error:", exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
