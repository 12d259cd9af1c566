import json
import os
import tempfile
import unittest
from fractions import Fraction

from parametrize import parametrize

from ..constants import MAX_BASENAME_LENGTH
from ..registry import REPORT_REGISTRY
from ..reports import Report
from ..storages.base import BaseStorage
from ..storages.filesystem import FileSystemStorage

__license__ = "MIT"
__all__ = ("TestStoragesTestCase",)


def _report() -> Report:
    report = Report(
        command="verify mumford", params={"n": 2, "beta": 3, "range": 6}
    )
    report.add_entry("c_{2,3}", "L(2),L(-2)", Fraction(74))
    return report


class TestStoragesTestCase(unittest.TestCase):
    """Test storages."""

    def setUp(self) -> None:
        super().setUp()
        self.root = tempfile.mkdtemp(prefix="sgl_cocycles_")

    def tearDown(self) -> None:
        super().tearDown()
        REPORT_REGISTRY.clean_up()
        for name in os.listdir(self.root):
            path = os.path.join(self.root, name)
            if os.path.isdir(path):
                os.rmdir(path)
        os.rmdir(self.root)

    @parametrize(
        "rel_path, basename, extension, expected",
        [
            ("", None, "json", "report.json"),
            ("", "verify-oracle_n=1", "csv", "verify-oracle_n=1.csv"),
            ("nested", "table", "md", os.path.join("nested", "table.md")),
        ],
    )
    def test_write_text(
        self: "TestStoragesTestCase", rel_path, basename, extension, expected
    ) -> None:
        storage = FileSystemStorage(root_path=self.root, rel_path=rel_path)
        filename = storage.generate_filename(
            extension=extension, basename=basename
        )
        self.assertEqual(filename, os.path.join(self.root, expected))
        written = storage.write_text(filename, "lhs,rhs,value\r\n")
        self.assertEqual(written, 15)
        self.assertTrue(storage.exists(filename))
        self.assertIn(storage.abspath(filename), REPORT_REGISTRY.filenames())
        with open(filename, encoding="utf-8", newline="") as file:
            self.assertEqual(file.read(), "lhs,rhs,value\r\n")

    def test_taken_names(self: "TestStoragesTestCase") -> None:
        storage = FileSystemStorage(root_path=self.root, rel_path="")
        names = []
        for _ in range(3):
            filename = storage.generate_filename("json", basename="torsor")
            storage.write_text(filename, "{}")
            names.append(os.path.basename(filename))
        self.assertEqual(
            names, ["torsor.json", "torsor_2.json", "torsor_3.json"]
        )

    def test_relative_names(self: "TestStoragesTestCase") -> None:
        storage = FileSystemStorage(rel_path="")
        self.assertEqual(
            storage.abspath("x.json"),
            os.path.join(os.path.abspath(tempfile.gettempdir()), "x.json"),
        )

    def test_missing_extension(self: "TestStoragesTestCase") -> None:
        with self.assertRaises(ValueError):
            FileSystemStorage(root_path=self.root).generate_filename("")

    def test_unlink(self: "TestStoragesTestCase") -> None:
        storage = FileSystemStorage(root_path=self.root, rel_path="")
        filename = storage.generate_filename(extension="json")
        storage.write_text(filename, "{}")
        storage.unlink(filename)
        self.assertFalse(storage.exists(filename))

    @parametrize(
        "command, params, expected",
        [
            (
                "verify mumford",
                {"n": 2, "beta": 3, "range": 6},
                "verify-mumford_n=2_beta=3_range=6",
            ),
            (
                "verify krichever-chi",
                {"degrees": ["3", "2,-1"]},
                "verify-krichever-chi_degrees=3+2,-1",
            ),
            ("cocycle", {"expr": "L(2) - E(1,1;0)"}, "cocycle_expr=L2-E1,10"),
            ("bracket", {}, "bracket"),
        ],
    )
    def test_report_basename(
        self: "TestStoragesTestCase", command, params, expected
    ) -> None:
        report = Report(command=command, params=params)
        self.assertEqual(BaseStorage().report_basename(report), expected)

    def test_report_basename_length(self: "TestStoragesTestCase") -> None:
        report = Report(command="table", params={"pairs": list(range(200))})
        basename = BaseStorage().report_basename(report)
        self.assertEqual(len(basename), MAX_BASENAME_LENGTH)
        self.assertTrue(basename.startswith("table_pairs=0+1+2"))

    def test_save_report(self: "TestStoragesTestCase") -> None:
        storage = FileSystemStorage(root_path=self.root, rel_path="")
        report = _report()
        filename = storage.save_report(report, "json")
        self.assertEqual(
            os.path.basename(filename),
            "verify-mumford_n=2_beta=3_range=6.json",
        )
        self.assertIn(filename, REPORT_REGISTRY.filenames())
        with open(filename, encoding="utf-8") as file:
            self.assertEqual(json.load(file)["entries"][0]["value"], "74")
        again = storage.save_report(report, "md")
        self.assertTrue(again.endswith("range=6.md"))
        self.assertNotEqual(
            storage.save_report(report, "json"), filename
        )

    def test_base_storage(self: "TestStoragesTestCase") -> None:
        storage = BaseStorage()
        for method, args in (
            (storage.generate_filename, ("json",)),
            (storage.write_text, ("x", "")),
            (storage.exists, ("x",)),
            (storage.abspath, ("x",)),
            (storage.unlink, ("x",)),
            (storage.save_report, (_report(), "json")),
        ):
            with self.assertRaises(NotImplementedError):
                method(*args)
