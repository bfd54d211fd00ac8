"""Batch command-line front end.

``lp-lab`` is a thin client over the service handlers: commands run
in-process by default and against a running service when --server is given,
producing identical bytes either way. Exit codes: 0 success, 2 input or data
error, 3 numeric failure, 4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import sys

import httpx
import numpy as np
from pydantic import ValidationError

from .core import Signal
from .errors import (
    DataError,
    InternalInvariantError,
    InvalidArgumentError,
    LpLabError,
    NumericError,
)
from .report import render_report
from .sigio import (
    format_signal_csv,
    load_json_spec,
    read_kv_config,
    read_signal_csv,
)
from .service import handlers
from .service.models import (
    ConstructRequest,
    ExperimentRequest,
    FitRequest,
    SynthRequest,
)

_REMOTE_TIMEOUT = 30.0


def _post(server: str, path: str, request) -> dict:
    """Send a request to a remote service, re-raising its errors as local ones."""
    url = server.rstrip("/") + "/v1/" + path
    response = httpx.post(
        url,
        json=request.model_dump(mode="json", exclude_none=True),
        timeout=_REMOTE_TIMEOUT,
    )
    if response.status_code == 200:
        return response.json()
    try:
        body = response.json()
    except ValueError:
        body = {}
    error = body.get("error")
    if error:
        message = f"{error.get('kind', 'error')}: {error.get('message', '')}"
        if response.status_code == 422:
            raise NumericError(message)
        if response.status_code == 500:
            raise InternalInvariantError(message)
        raise DataError(message)
    if "detail" in body:
        raise DataError(f"request rejected: {body['detail']}")
    raise DataError(f"server returned HTTP {response.status_code}")


def _call(args, path: str, request) -> dict | object:
    if args.server:
        return _post(args.server, path, request)
    local = {
        "synth": handlers.run_synth,
        "fit": handlers.run_fit,
        "construct": handlers.run_construct,
        "experiment": handlers.run_experiment,
    }
    return local[path](request)


def _write_text(output: str | None, text: str) -> None:
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_synth(args) -> int:
    spec = load_json_spec(args.input)
    try:
        request = SynthRequest(spec=spec, count=args.count)
    except ValidationError as exc:
        raise InvalidArgumentError(f"{args.input}: {exc.errors()[0]['msg']}") from exc
    result = _call(args, "synth", request)
    values = result["values"] if isinstance(result, dict) else result.values
    _write_text(args.output, format_signal_csv(Signal(np.array(values))))
    return 0


def _report_command(args, path: str, request) -> int:
    result = _call(args, path, request)
    doc = result if isinstance(result, dict) else result.model_dump(exclude_none=True)
    _write_text(args.output, render_report(doc))
    return 0


def cmd_fit(args) -> int:
    signal = read_signal_csv(args.input)
    request = FitRequest(
        values=[float(v) for v in signal.samples],
        order=args.order,
        method=args.method,
    )
    return _report_command(args, "fit", request)


def cmd_construct(args) -> int:
    signal = read_signal_csv(args.input)
    request = ConstructRequest(
        values=[float(v) for v in signal.samples],
        method=args.method,
        order=args.order,
    )
    return _report_command(args, "construct", request)


def _config_value(cfg: dict[str, str], key: str, source: str) -> str:
    try:
        return cfg[key]
    except KeyError:
        raise InvalidArgumentError(f"{source}: missing required key {key!r}") from None


def _parse_numbers(text: str, key: str, source: str, cast) -> list:
    try:
        return [cast(token) for token in text.split()]
    except ValueError:
        raise InvalidArgumentError(
            f"{source}: key {key!r} must be space-separated numbers, got {text!r}"
        ) from None


def _parse_single_int(text: str, key: str, source: str) -> int:
    values = _parse_numbers(text, key, source, int)
    if len(values) != 1:
        raise InvalidArgumentError(f"{source}: key {key!r} needs exactly one integer")
    return values[0]


def _experiment_request(kind: str, cfgpath: str) -> ExperimentRequest:
    cfg = read_kv_config(cfgpath)
    interval = _parse_numbers(_config_value(cfg, "interval", cfgpath), "interval", cfgpath, float)
    if len(interval) != 2:
        raise InvalidArgumentError(f"{cfgpath}: key 'interval' needs exactly two numbers")
    fields: dict = {
        "kind": kind,
        "function": _config_value(cfg, "function", cfgpath),
        "x_lo": interval[0],
        "x_hi": interval[1],
    }
    if "coefficients" in cfg:
        fields["coefficients"] = _parse_numbers(
            cfg["coefficients"], "coefficients", cfgpath, float
        )
    if kind == "refine":
        fields["order"] = _parse_single_int(_config_value(cfg, "p", cfgpath), "p", cfgpath)
        fields["n_values"] = _parse_numbers(
            _config_value(cfg, "n_values", cfgpath), "n_values", cfgpath, int
        )
    else:
        fields["n"] = _parse_single_int(_config_value(cfg, "n", cfgpath), "n", cfgpath)
        fields["p_values"] = _parse_numbers(
            _config_value(cfg, "p_values", cfgpath), "p_values", cfgpath, int
        )
    try:
        return ExperimentRequest(**fields)
    except ValidationError as exc:
        raise InvalidArgumentError(f"{cfgpath}: {exc.errors()[0]['msg']}") from exc


def cmd_experiment(args) -> int:
    request = _experiment_request(args.kind, args.config)
    return _report_command(args, "experiment", request)


def cmd_serve(args) -> int:
    import uvicorn

    uvicorn.run("lplab.service.app:app", host=args.host, port=args.port)
    return 0


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--output", help="output file (default: stdout)")
    parser.add_argument(
        "--server",
        help="base URL of a running lp-lab service; default is in-process execution",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lp-lab",
        description="Linear prediction toolkit: synthesis, fitting, construction, experiments",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    synth = sub.add_parser("synth", help="generate a signal from a JSON spec")
    synth.add_argument("--input", required=True, help="JSON spec: a+initial or bases+weights")
    synth.add_argument("--count", type=int, required=True, help="number of samples")
    _add_common(synth)
    synth.set_defaults(handler=cmd_synth)

    fit = sub.add_parser("fit", help="least-squares fit and basis identification")
    fit.add_argument("--input", required=True, help="signal CSV")
    fit.add_argument("--order", "-p", type=int, required=True, help="recurrence order")
    fit.add_argument(
        "--method",
        choices=["covariance", "autocorrelation"],
        default="covariance",
    )
    _add_common(fit)
    fit.set_defaults(handler=cmd_fit)

    construct = sub.add_parser("construct", help="DCT-1 or difference construction")
    construct.add_argument("--input", required=True, help="signal CSV")
    construct.add_argument("--method", choices=["dct", "diff"], required=True)
    construct.add_argument(
        "--order", "-p", type=int, required=True,
        help="selection size (dct) or difference order (diff)",
    )
    _add_common(construct)
    construct.set_defaults(handler=cmd_construct)

    experiment = sub.add_parser("experiment", help="refinement or order-sweep table")
    experiment.add_argument("kind", choices=["refine", "order-sweep"])
    experiment.add_argument("--config", required=True, help="key-value config file")
    _add_common(experiment)
    experiment.set_defaults(handler=cmd_experiment)

    serve = sub.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    serve.set_defaults(handler=cmd_serve, server=None)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except ValidationError as exc:
        first = exc.errors()[0]
        print(f"lp-lab: error[invalid-request]: {first['msg']}", file=sys.stderr)
        return 2
    except DataError as exc:
        print(f"lp-lab: error[{exc.kind}]: {exc}", file=sys.stderr)
        return 2
    except NumericError as exc:
        print(f"lp-lab: error[{exc.kind}]: {exc}", file=sys.stderr)
        return 3
    except InternalInvariantError as exc:
        print(f"lp-lab: error[{exc.kind}]: {exc}", file=sys.stderr)
        return 4
    except LpLabError as exc:
        print(f"lp-lab: error[{exc.kind}]: {exc}", file=sys.stderr)
        return 3
    except httpx.HTTPError as exc:
        print(f"lp-lab: error[transport]: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
