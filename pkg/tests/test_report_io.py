"""Tests for signal files, config parsing, and report documents."""

import json
import math

import numpy as np
import pytest

from lplab import InternalInvariantError, InvalidArgumentError, Signal, SignalParseError
from lplab.report import (
    REPORT_SCHEMA,
    build_report,
    canonical_document,
    render_report,
    validate_report,
)
from lplab.sigio import (
    format_signal_csv,
    parse_kv_config,
    parse_signal_csv,
    read_signal_csv,
    write_signal_csv,
)


class TestSignalCsv:
    def test_parses_plain_numbers(self):
        signal = parse_signal_csv("1.5\n-2\n3e-1\n")
        np.testing.assert_allclose(signal.samples, [1.5, -2.0, 0.3])

    def test_skips_blank_lines_and_header(self):
        signal = parse_signal_csv("value\n\n1\n\n2\n")
        np.testing.assert_array_equal(signal.samples, [1.0, 2.0])

    def test_header_only_allowed_on_first_content_line(self):
        with pytest.raises(SignalParseError, match="line 3"):
            parse_signal_csv("1\n2\nvalue\n")

    def test_reports_bad_line_number(self):
        with pytest.raises(SignalParseError, match="line 2"):
            parse_signal_csv("1.0\nbanana\n2.0\n")

    def test_rejects_non_finite(self):
        with pytest.raises(SignalParseError, match="line 1"):
            parse_signal_csv("inf\n")

    def test_rejects_empty_file(self):
        with pytest.raises(SignalParseError):
            parse_signal_csv("\n\n")

    def test_round_trips_through_file(self, tmp_path):
        path = tmp_path / "sig.csv"
        original = Signal([1.0, 1 / 3, -2.5e-17])
        write_signal_csv(original, path)
        recovered = read_signal_csv(path)
        np.testing.assert_array_equal(recovered.samples, original.samples)

    def test_format_uses_shortest_roundtrip_repr(self):
        assert format_signal_csv(Signal([0.1, 7.0])) == "0.1\n7.0\n"


class TestKvConfig:
    def test_parses_keys_and_comments(self):
        cfg = parse_kv_config("# experiment\nfunction = sin\ninterval = 0 6.28\n")
        assert cfg == {"function": "sin", "interval": "0 6.28"}

    def test_rejects_missing_equals(self):
        with pytest.raises(SignalParseError, match="line 2"):
            parse_kv_config("a = 1\nnonsense\n")

    def test_rejects_duplicate_keys(self):
        with pytest.raises(SignalParseError, match="duplicate"):
            parse_kv_config("a = 1\na = 2\n")


class TestReports:
    def test_build_orders_fields_canonically(self):
        doc = build_report(
            command="construct",
            inputs={"order": 2},
            mse=0.5,
            coefficients=[2.0, -1.0],
            bound=1.0,
        )
        assert list(doc) == ["schema_version", "command", "inputs", "coefficients", "mse", "bound"]

    def test_render_is_deterministic(self):
        doc = build_report(command="fit", inputs={"order": 1}, mse=0.25)
        assert render_report(doc) == render_report(json.loads(render_report(doc)))

    def test_numpy_scalars_are_converted(self):
        doc = build_report(
            command="fit", inputs={"n": np.int64(3)}, mse=np.float64(0.5)
        )
        assert isinstance(doc["inputs"]["n"], int)
        assert isinstance(doc["mse"], float)

    def test_non_finite_numbers_rejected(self):
        with pytest.raises(InvalidArgumentError):
            build_report(command="fit", inputs={"x": math.inf})

    def test_schema_rejects_unknown_fields(self):
        doc = build_report(command="fit", inputs={})
        doc["extra"] = 1
        with pytest.raises(InternalInvariantError):
            validate_report(doc)

    def test_schema_rejects_negative_mse(self):
        with pytest.raises(InternalInvariantError):
            validate_report(
                {"schema_version": "1", "command": "fit", "inputs": {}, "mse": -1.0}
            )

    def test_canonical_document_rejects_unknown_keys(self):
        with pytest.raises(InvalidArgumentError):
            canonical_document({"schema_version": "1", "command": "fit", "bogus": 0})

    def test_schema_is_publishable(self):
        # the schema itself must be valid JSON (no python-only values)
        json.dumps(REPORT_SCHEMA)
