# Copyright (c) 2025 Tsutomu FUNADA
# This software is licensed for:
#   - Non-commercial use under the MIT License (see LICENSE-NC.txt)
#   - Commercial use requires a separate commercial license (contact author)
# You may not use this software for commercial purposes under the MIT License.

from abc import ABC, abstractmethod
from typing import List

from algebra.records import LoadedAlgebra
from models.types import ReportRecord


class AbstractReportBackend(ABC):
    @abstractmethod
    def list_algebras(self) -> List[str]:
        """
        Lists the bundled algebra spec names.

        Returns:
            List[str]: Spec names without extension, sorted.

        Process:
            1. Look up the algebra directory. If it does not exist, return an empty list.
            2. Collect every `*.json` file name without its extension.
        """
        pass

    @abstractmethod
    def load_algebra(self, ref: str) -> LoadedAlgebra:
        """
        Loads an algebra spec by bundled name or by path.

        Args:
            ref (str): A bundled name (e.g. 'k_x2') or a path to a JSON spec.

        Returns:
            LoadedAlgebra: The parsed algebra with its named modules and symmetry flag.

        Raises:
            ParseError: If the file is missing or malformed.

        Process:
            1. Resolve `ref` as an existing path, else as `<algebra dir>/<ref>.json`.
            2. Read the text and parse it; JSON syntax errors carry the line number.
        """
        pass

    @abstractmethod
    def save_report(self, name: str, report: ReportRecord, path: str = None) -> str:
        """
        Saves a structured report as canonical JSON.

        Args:
            name (str): Report name used when no explicit path is given.
            report (ReportRecord): The report.
            path (str): Optional explicit output path.

        Returns:
            str: The path written.

        Raises:
            RuntimeError: If writing fails.

        Process:
            1. Ensure the parent directory exists.
            2. Serialize with sorted keys and fixed indentation so equal reports are byte-identical.
        """
        pass

    @abstractmethod
    def save_text(self, path: str, text: str) -> str:
        """
        Saves plain text (a DOT graph or a text report).

        Args:
            path (str): Output path.
            text (str): Content.

        Returns:
            str: The path written.

        Raises:
            RuntimeError: If writing fails.
        """
        pass
