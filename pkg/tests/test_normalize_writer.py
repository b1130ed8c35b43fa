"""Report normalization and rendering."""

import json
from fractions import Fraction

import mpmath
import pytest

from rotcocycle.circlelift import TransResult
from rotcocycle.cocycle import CoverType
from rotcocycle.errors import ConfigError
from rotcocycle.normalize import is_json_primitive, normalize_value
from rotcocycle.words import empty, word
from rotcocycle.writer import ReportWriter


class TestNormalizeValue:
    @pytest.mark.parametrize(
        ("value", "expected"),
        [
            (None, None),
            (True, True),
            (7, 7),
            ("a1", "a1"),
            (-0.0, 0),
            (float("inf"), None),
            (float("nan"), None),
            (Fraction(4, 2), 2),
            (Fraction(-1, 3), "-1/3"),
            (CoverType.PANTS_MATCHED, "pants-matched"),
            ((1, 2), [1, 2]),
            ({3, 1, 2}, [1, 2, 3]),
        ],
    )
    def test_scalars_and_containers(self, value, expected):
        assert normalize_value(value) == expected

    def test_words_become_text(self):
        assert normalize_value(word(2, 1, -4)) == "a1 B2"
        assert normalize_value(empty(2)) == "-"

    def test_dataclass(self):
        result = TransResult(value=-2, certified=True, residual=0.0, precision="double")
        assert normalize_value(result) == {"value": -2, "certified": True, "residual": 0, "precision": "double"}

    def test_mapping_keys_become_strings(self):
        assert normalize_value({1: Fraction(1, 2)}) == {"1": "1/2"}

    def test_extended_numbers_become_floats(self):
        assert normalize_value(mpmath.mpf("0.5")) == 0.5

    def test_unsupported_type_becomes_null(self):
        assert normalize_value(object()) is None

    def test_primitive_guard(self):
        assert is_json_primitive(None)
        assert is_json_primitive(1.5)
        assert not is_json_primitive([1])


class TestReportWriter:
    def test_json_is_sorted_with_trailing_newline(self):
        text = ReportWriter().render({"b": 1, "a": [Fraction(1, 2)]})
        assert text.endswith("\n")
        assert text.index('"a"') < text.index('"b"')
        assert json.loads(text) == {"a": ["1/2"], "b": 1}

    def test_json_is_byte_stable(self):
        payload = {"checks": [{"name": "tau_range", "passed": True}], "seed": 0}
        assert ReportWriter().render(payload) == ReportWriter().render(dict(reversed(payload.items())))

    def test_csv_rows(self):
        payload = {"rows": [{"phi": "push(a1)", "r": [0, -2]}, {"phi": "twist(b1)", "r": [1, 0]}], "genus": 2}
        text = ReportWriter("csv", rows_key="rows").render(payload)
        lines = text.splitlines()
        assert lines[0] == "phi,r"
        assert lines[1] == 'push(a1),"[0, -2]"'
        assert len(lines) == 3

    def test_csv_falls_back_to_key_value(self):
        text = ReportWriter("csv").render({"value": -2, "word": "a1"})
        assert text.splitlines() == ["key,value", "value,-2", 'word,"""a1"""']

    def test_unknown_format(self):
        with pytest.raises(ConfigError, match="unknown format"):
            ReportWriter("yaml")  # type: ignore[arg-type]

    def test_write_to_file(self, tmp_path):
        target = tmp_path / "report.json"
        text = ReportWriter().write({"ok": True}, target)
        assert target.read_text(encoding="utf-8") == text

    def test_write_without_target_returns_text(self):
        assert ReportWriter().write({"ok": True}, None) == '{\n  "ok": true\n}\n'
