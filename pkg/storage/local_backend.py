# Copyright (c) 2025 Tsutomu FUNADA
# This software is licensed for:
#   - Non-commercial use under the MIT License (see LICENSE-NC.txt)
#   - Commercial use requires a separate commercial license (contact author)
# You may not use this software for commercial purposes under the MIT License.

import json
import logging
import os
from typing import List, Optional

from algebra.records import LoadedAlgebra, load_algebra_text
from config import settings
from models.errors import ParseError
from models.types import ReportRecord
from storage.abstract_backend import AbstractReportBackend


class LocalReportBackend(AbstractReportBackend):
    """Reads algebra specs and writes reports on the local file system."""

    def __init__(self, report_dir: Optional[str] = None, algebra_dir: Optional[str] = None):
        self.report_dir = report_dir or settings.REPORT_DIRECTORY
        self.algebra_dir = algebra_dir or settings.ALGEBRA_DIRECTORY

    def _algebra_path(self, ref: str) -> str:
        if os.path.isfile(ref):
            return ref
        return os.path.join(self.algebra_dir, f"{ref}.json")

    def list_algebras(self) -> List[str]:
        if not os.path.isdir(self.algebra_dir):
            return []
        return sorted(os.path.splitext(f)[0] for f in os.listdir(self.algebra_dir) if f.endswith(".json"))

    def load_algebra(self, ref: str) -> LoadedAlgebra:
        path = self._algebra_path(ref)
        if not os.path.isfile(path):
            raise ParseError(f"algebra spec '{ref}' not found", field="algebra")
        with open(path, "r", encoding="utf-8") as f:
            text = f.read()
        loaded = load_algebra_text(text)
        logging.info(f"[load_algebra] {loaded.algebra.name} from {path}")
        return loaded

    def _write(self, path: str, text: str) -> str:
        parent = os.path.dirname(path)
        if parent:
            os.makedirs(parent, exist_ok=True)
        try:
            with open(path, "w", encoding="utf-8") as f:
                f.write(text)
        except Exception as e:
            raise RuntimeError(f"Failed to write {path}: {str(e)}")
        return path

    def save_report(self, name: str, report: ReportRecord, path: Optional[str] = None) -> str:
        path = path or os.path.join(self.report_dir, f"{name}.json")
        text = json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
        saved = self._write(path, text)
        logging.info(f"[save_report] {saved}")
        return saved

    def save_text(self, path: str, text: str) -> str:
        return self._write(path, text)
