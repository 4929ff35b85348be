# Copyright (c) 2025 Tsutomu FUNADA
# This software is licensed for:
#   - Non-commercial use under the MIT License (see LICENSE-NC.txt)
#   - Commercial use requires a separate commercial license (contact author)
# You may not use this software for commercial purposes under the MIT License.

import inspect
import json
import logging
import threading
from typing import Any, Dict, List, Optional, Tuple

from algebra.records import LoadedAlgebra
from ar.catalog import ARCatalog, module_catalog
from config import settings
from config.types import REPORT_SCHEMA, ReportFormat
from models.errors import ParseError
from models.types import CheckRow, ReportRecord, RunConfig
from morphism.catalog import HCatalog, h_catalog
from storage.abstract_backend import AbstractReportBackend

Outcome = Tuple[List[CheckRow], List[str], Dict[str, Any]]


def render_text(report: ReportRecord) -> str:
    """Human readable form of a report: a header line, then one line per row, then notes."""
    lines = [f"{report['command']} on {report.get('algebra', '?')}: {report['status']}"]
    for row in report.get("rows", []):
        mark = "PASS" if row.get("passed", True) else "FAIL"
        line = f"[{mark}] {row.get('section', '')}/{row.get('check', '')}: {row.get('detail', '')}"
        if row.get("witness"):
            line += f" (witness: {row['witness']})"
        lines.append(line)
    lines.extend(f"note: {note}" for note in report.get("notes", []))
    return "\n".join(lines) + "\n"


class BaseService:
    """
    Shared plumbing of every subcommand: algebra resolution, per-algebra locking,
    catalog access and report assembly.
    """

    def __init__(self, backend: AbstractReportBackend, command_name: str):
        """
        Args:
            backend (AbstractReportBackend): Where algebra specs come from and reports go.
            command_name (str): The subcommand this service answers.
        """
        self.backend: AbstractReportBackend = backend
        self.command_name: str = command_name
        self.algebra_locks: dict[str, threading.RLock] = {}

    def _get_algebra_lock(self, name: str) -> threading.RLock:
        """Returns the reentrant lock of one algebra, creating it on first use."""
        if name not in self.algebra_locks:
            self.algebra_locks[name] = threading.RLock()
        return self.algebra_locks[name]

    def _load(self, config: RunConfig) -> LoadedAlgebra:
        ref = config.get("algebra")
        if not ref:
            raise ParseError("an algebra is required", field="algebra")
        return self.backend.load_algebra(ref)

    def _require(self, config: RunConfig, key: str) -> str:
        value = config.get(key)
        if not value:
            raise ParseError(f"--{key} is required for {self.command_name}", field=key)
        return value

    def _catalogs(self, loaded: LoadedAlgebra, config: RunConfig) -> Tuple[ARCatalog, HCatalog]:
        cap = config.get("max_dim") or settings.MAX_DIM
        return module_catalog(loaded.algebra, cap), h_catalog(loaded.algebra, cap)

    def _generate_report_dict(
        self,
        status: str,
        algebra: str,
        rows: Optional[List[CheckRow]] = None,
        notes: Optional[List[str]] = None,
        extra: Optional[Dict[str, Any]] = None,
        seed: Optional[int] = None,
    ) -> ReportRecord:
        """
        Assembles a structured report.

        Args:
            status (str): "success", "failed" or "error".
            algebra (str): Algebra display name.
            rows (Optional[List[CheckRow]]): Result rows in emission order.
            notes (Optional[List[str]]): Free-form remarks.
            extra (Optional[dict]): Command specific payload.
            seed (Optional[int]): The run seed; HCAT_SEED when omitted.

        Returns:
            ReportRecord: The report, tagged with the schema and the seed.
        """
        currentframe = inspect.currentframe()
        func_name = currentframe.f_back.f_code.co_name if currentframe and currentframe.f_back else "unknown"
        report: ReportRecord = {
            "schema": REPORT_SCHEMA,
            "command": self.command_name,
            "status": status,
            "algebra": algebra,
            "seed": settings.SEED if seed is None else seed,
            "rows": rows or [],
            "notes": notes or [],
            "extra": extra or {},
        }
        logging.info(f"[{func_name}] {self.command_name} on {algebra}: {status} ({len(report['rows'])} rows)")
        return report

    def _row(self, check: str, algebra: str, detail: str, passed: bool = True, witness: Optional[str] = None) -> CheckRow:
        return {
            "section": self.command_name,
            "check": check,
            "algebra": algebra,
            "passed": passed,
            "detail": detail,
            "witness": witness,
        }

    def _execute(self, loaded: LoadedAlgebra, config: RunConfig) -> Outcome:
        raise NotImplementedError

    def run(self, config: RunConfig) -> ReportRecord:
        """Loads the algebra, runs the command under the algebra's lock and builds the report."""
        loaded = self._load(config)
        name = loaded.algebra.name
        with self._get_algebra_lock(name):
            rows, notes, extra = self._execute(loaded, config)
        status = "success" if all(row.get("passed", True) for row in rows) else "failed"
        return self._generate_report_dict(status, name, rows, notes, extra, seed=config.get("seed"))

    def emit(self, report: ReportRecord, config: RunConfig) -> str:
        """Renders the report in the requested format and writes it to --output when given."""
        structured = config.get("format") == ReportFormat.STRUCTURED.value
        if structured:
            text = json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
        else:
            text = render_text(report)
        output = config.get("output")
        if output:
            if structured:
                self.backend.save_report(self.command_name, report, output)
            else:
                self.backend.save_text(output, text)
        return text
