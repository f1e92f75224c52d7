# -*- coding: utf-8 -*-

"""序列化、导出器与码本文件读写"""

import json
import os
from fractions import Fraction

import jsonschema
import pandas as pd
import pytest

from data.codebook_repository import FileCodebookRepository, format_codebook, parse_codebook
from models.codebook import Codebook
from models.simplex_point import SimplexPoint
from services.exporters import JSONExporter, ResultExporter
from services.exporters.serialization import (
    decimal_value,
    exact_field,
    fraction_text,
    radius_report_to_json,
    to_jsonable,
)
from services.radii import radius_report
from utils.exceptions import CodebookFormatError, ParameterError

from tests.conftest import SIMPLEX_ROWS


class TestSerialization:

    def test_fraction_text(self):
        assert fraction_text(Fraction(2, 6)) == "1/3"
        assert fraction_text(Fraction(4, 2)) == "2"
        assert fraction_text(0) == "0"

    def test_exact_field(self):
        assert exact_field("p", Fraction(1, 4)) == {"p": "1/4", "p_decimal": 0.25}
        assert exact_field("p", None) == {"p": None, "p_decimal": None}

    def test_decimal_digits(self):
        assert decimal_value(Fraction(1, 3)) == round(1 / 3, 12)
        assert decimal_value(Fraction(1, 3), digits=3) == 0.333

    def test_to_jsonable_nested(self):
        data = to_jsonable({"w": SimplexPoint.rational([Fraction(1, 2), Fraction(1, 2)]),
                            "values": (Fraction(1, 9), 2)})
        assert data["values"] == ["1/9", 2]
        assert data["w"] == ["1/2", "1/2"]

    def test_radius_report_schema(self, simplex_code, load_schema):
        report = radius_report(simplex_code.rows, 3, 1)
        data = radius_report_to_json(report)
        jsonschema.validate(data, load_schema("radius_report.schema.json"))
        assert data["chebyshev"] == "2/3"
        assert data["sandwich_holds"] is True


class TestExporters:

    def test_csv_writes_fractions(self):
        frame = pd.DataFrame({"m": [1, 2], "p_exact": [Fraction(1, 2), Fraction(2, 5)]})
        text = ResultExporter().render("csv", frame)
        assert text.splitlines() == ["m,p_exact", "1,1/2", "2,2/5"]

    def test_json_is_valid(self):
        text = ResultExporter().render("json", {"radius": Fraction(1, 3), "rows": [0, 1]})
        assert json.loads(text) == {"radius": "1/3", "rows": [0, 1]}

    def test_unknown_format(self):
        with pytest.raises(ParameterError):
            ResultExporter().render("xml", {})

    def test_export_writes_files(self, tmp_path):
        messages = []
        saved = ResultExporter().export({"a": 1}, ["json", "xml"], str(tmp_path), "result", messages.append)
        assert saved == [os.path.join(str(tmp_path), "result.json")]
        assert len(messages) == 1
        assert json.loads((tmp_path / "result.json").read_text(encoding="utf-8")) == {"a": 1}

    def test_register_exporter(self):
        class UpperExporter(JSONExporter):
            def render(self, payload):
                return super().render(payload).upper()

        exporter = ResultExporter()
        exporter.register_exporter("upper", UpperExporter())
        assert json.loads(exporter.render("upper", {"key": "v"})) == {"KEY": "V"}

    def test_codebook_exporter(self, simplex_code):
        text = ResultExporter().render("codebook", simplex_code)
        assert text.splitlines()[0] == "3 6 3"


class TestCodebookFiles:

    def test_parse_and_format(self, simplex_code):
        text = format_codebook(simplex_code)
        assert parse_codebook(text) == simplex_code

    def test_comments_and_blank_lines(self):
        code = parse_codebook("# 注释\n2 3 2\n\n1 2 1\n2 2 1\n")
        assert code.rows == ((1, 2, 1), (2, 2, 1))

    @pytest.mark.parametrize("text", [
        "",
        "3 6\n1 1 2 2 3 3\n",
        "3 x 1\n1 1 2 2 3 3\n",
        "3 6 2\n1 1 2 2 3 3\n",
        "3 6 1\n1 1 2 2 3\n",
        "3 6 1\n1 1 2 2 3 a\n",
        "3 6 1\n1 1 2 2 3 4\n",
    ])
    def test_bad_files(self, text):
        with pytest.raises(CodebookFormatError):
            parse_codebook(text)

    def test_repository_roundtrip(self, tmp_path, codefile):
        repo = FileCodebookRepository(str(tmp_path))
        loaded = repo.load(codefile(3, SIMPLEX_ROWS))
        path = repo.save(loaded, os.path.join("out", "copy.txt"))
        assert repo.load(path) == Codebook.from_rows(3, SIMPLEX_ROWS)

    def test_missing_file(self, tmp_path):
        with pytest.raises(CodebookFormatError):
            FileCodebookRepository(str(tmp_path)).load("missing.txt")
