"""Thin command-line client for the compute service.

The CLI never computes anything itself: it builds a JSON request, sends it to
the service (by default the FastAPI app run in-process; pass --server to talk
to a remote instance), and renders the response either as the raw JSON
envelope or as an aligned plain-text table.  Diagnostics go to stderr,
results to stdout.

Exit status: 0 on success, 1 on validation errors (bad flags, unreadable
files, malformed documents), 2 on computation errors (e.g. a torsion
coordinate system).  `selftest` additionally exits 1 when any check fails.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

import httpx

_BUILTIN_RE = re.compile(r"^(MU|sl1MU|Z_even_shift\(\d+\))$")

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_COMPUTATION = 2


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad usage; the contract here is 1."""

    def error(self, message: str) -> None:  # pragma: no cover - trivial
        self.print_usage(sys.stderr)
        self.exit(EXIT_VALIDATION, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("table", "json"), default="table", help="output format"
    )
    common.add_argument(
        "--server",
        default=None,
        help="base URL of a running service; default runs the service in-process",
    )

    parser = _Parser(prog="bottlift", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("newton", parents=[common], help="Newton polynomial q_m")
    p.add_argument("--m", type=int, required=True)

    p = sub.add_parser("powersum", parents=[common], help="power sum s_m in the b's")
    p.add_argument("--m", type=int, required=True)

    p = sub.add_parser("bott", parents=[common], help="suspension pushforward of b_m")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--iterate", type=int, choices=(1, 2), default=1)

    p = sub.add_parser("bsu-map", parents=[common], help="level-2 generator images")
    p.add_argument("--max-m", type=int, default=12)

    p = sub.add_parser("bu6-map", parents=[common], help="level-4 generator images")
    p.add_argument("--max-m", type=int, default=12)

    p = sub.add_parser("ranks", parents=[common], help="cohomology rank table")
    p.add_argument("--n", type=int, choices=(2, 4), required=True)
    p.add_argument("--max-degree", type=int, default=40)

    p = sub.add_parser("pi0", parents=[common], help="lifting-set factors for an even target")
    p.add_argument("--n", type=int, choices=(2, 4), required=True)
    p.add_argument("--coeffs", required=True, help="builtin name or file path")
    p.add_argument("--max-degree", type=int, default=40)

    p = sub.add_parser("index-table", parents=[common], help="restriction indices")
    p.add_argument("--n", type=int, choices=(2, 4), required=True)
    p.add_argument("--max-m", type=int, default=12)

    p = sub.add_parser("obstruct", parents=[common], help="coordinate lifting verdicts")
    p.add_argument("--n", type=int, choices=(2, 4), required=True)
    p.add_argument("--coeffs", required=True, help="builtin name or file path")
    p.add_argument("--coordinate", required=True, help="coordinate file path")

    sub.add_parser("selftest", parents=[common], help="run the reproduction suite")

    return parser


def _read_file(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise FileNotFoundError(f"cannot read {path}: {exc}") from exc


def _coeffs_spec(value: str) -> dict:
    if _BUILTIN_RE.match(value):
        return {"builtin": value, "text": None}
    if Path(value).exists():
        return {"builtin": None, "text": _read_file(value)}
    raise FileNotFoundError(
        f"--coeffs {value!r} is neither a builtin (MU, sl1MU, Z_even_shift(d)) "
        "nor a readable file"
    )


def _request_for(args: argparse.Namespace) -> tuple[str, dict]:
    """(endpoint path, request body) for the parsed command line."""
    cmd = args.command
    if cmd == "newton":
        return "/newton", {"m": args.m}
    if cmd == "powersum":
        return "/powersum", {"m": args.m}
    if cmd == "bott":
        return "/bott", {"m": args.m, "iterate": args.iterate}
    if cmd == "bsu-map":
        return "/bsu-map", {"max_m": args.max_m}
    if cmd == "bu6-map":
        return "/bu6-map", {"max_m": args.max_m}
    if cmd == "ranks":
        return "/ranks", {"n": args.n, "max_degree": args.max_degree}
    if cmd == "pi0":
        return "/pi0", {
            "n": args.n,
            "coeffs": _coeffs_spec(args.coeffs),
            "max_degree": args.max_degree,
        }
    if cmd == "index-table":
        return "/index-table", {"n": args.n, "max_m": args.max_m}
    if cmd == "obstruct":
        return "/obstruct", {
            "n": args.n,
            "coeffs": _coeffs_spec(args.coeffs),
            "coordinate_text": _read_file(args.coordinate),
        }
    if cmd == "selftest":
        return "/selftest", {}
    raise AssertionError(f"unhandled command {cmd!r}")


def _make_client(server: str | None) -> httpx.Client:
    if server is not None:
        return httpx.Client(base_url=server, timeout=60.0)
    import warnings

    with warnings.catch_warnings():
        # the in-process test transport import warns about its httpx pin
        warnings.simplefilter("ignore")
        from fastapi.testclient import TestClient

    from .service.app import app

    return TestClient(app)


# -- table renderers ----------------------------------------------------------


def _align(rows: list[tuple[str, ...]]) -> list[str]:
    if not rows:
        return []
    ncol = len(rows[0])
    widths = [max(len(r[i]) for r in rows) for i in range(ncol)]
    out = []
    for r in rows:
        cells = [r[i].ljust(widths[i]) for i in range(ncol - 1)]
        cells.append(r[-1])
        out.append("  ".join(cells).rstrip())
    return out


def _render_table(payload: dict) -> list[str]:
    cmd = payload["command"]
    inputs = payload["inputs"]
    results = payload["results"]
    if cmd == "newton":
        return [f"q{inputs['m']} = {results['polynomial']}"]
    if cmd == "powersum":
        return [f"s{inputs['m']} = {results['polynomial']}"]
    if cmd == "bott":
        op = "B" if inputs["iterate"] == 1 else "B^2"
        return [f"{op} b{inputs['m']} = {results['polynomial']}"]
    if cmd in ("bsu-map", "bu6-map"):
        rows = [("m", "generator", "image")]
        rows += [(str(r["m"]), r["source"], f"-> {r['image']}") for r in results["rows"]]
        return _align(rows)
    if cmd == "ranks":
        rows = [("degree", "rank")]
        rows += [(str(r["degree"]), str(r["rank"])) for r in results["rows"]]
        return [f"space: {results['space']}"] + _align(rows)
    if cmd == "pi0":
        rows = [("k", "pi-degree", "H-degree", "group")]
        rows += [
            (str(f["k"]), str(f["coefficient_degree"]), str(f["cohomology_degree"]), f["group"])
            for f in results["factors"]
        ]
        header = f"space: {results['space']}  coefficients: {results['coefficients']}"
        return [header] + _align(rows)
    if cmd == "index-table":
        rows = [("m", "index")]
        rows += [(str(r["m"]), str(r["index"])) for r in results["rows"]]
        return _align(rows)
    if cmd == "obstruct":
        head = [
            f"coefficients: {results['coefficients']}  truncation: {results['truncation']}",
            f"leading degree: {results['leading_m']}  "
            f"obstructed: {'yes' if results['obstructed'] else 'no'}",
        ]
        rows = [("m", "index", "verdict", "note")]
        rows += [
            (str(r["m"]), str(r["index"]), r["verdict"], r["note"])
            for r in results["records"]
        ]
        return head + _align(rows)
    if cmd == "selftest":
        from .selftest import format_selftest_lines

        return format_selftest_lines(results)
    raise AssertionError(f"unhandled command {cmd!r}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        path, body = _request_for(args)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION

    try:
        with _make_client(args.server) as client:
            response = client.post(path, json=body)
    except httpx.HTTPError as exc:
        print(f"error: cannot reach service: {exc}", file=sys.stderr)
        return EXIT_COMPUTATION

    if response.status_code != 200:
        try:
            detail = response.json().get("detail")
        except ValueError:
            detail = response.text
        print(f"error: {json.dumps(detail) if not isinstance(detail, str) else detail}",
              file=sys.stderr)
        if response.status_code in (400, 422):
            return EXIT_VALIDATION
        return EXIT_COMPUTATION

    payload = response.json()
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        for line in _render_table(payload):
            print(line)

    if args.command == "selftest" and not payload["results"]["passed"]:
        return 1
    return EXIT_OK


def entrypoint() -> None:  # console_scripts hook
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
