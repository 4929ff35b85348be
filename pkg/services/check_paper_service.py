# Copyright (c) 2025 Tsutomu FUNADA
# This software is licensed for:
#   - Non-commercial use under the MIT License (see LICENSE-NC.txt)
#   - Commercial use requires a separate commercial license (contact author)
# You may not use this software for commercial purposes under the MIT License.

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Dict, List

from algebra.records import LoadedAlgebra
from config import settings
from config.types import CHECK_SECTIONS
from models.errors import ParseError
from models.types import CheckRow, RunConfig
from services.base_service import BaseService, Outcome
from services.check_sections import foundation_rows, middle_rows, quiver_rows, sequence_rows, tau_rows


class CheckPaperService(BaseService):
    """Runs the check sections in a thread pool and assembles them in a fixed order."""

    def __init__(self, backend):
        super().__init__(backend, "check-paper")

    def _execute(self, loaded: LoadedAlgebra, config: RunConfig) -> Outcome:
        sections = config.get("sections") or CHECK_SECTIONS
        unknown = [s for s in sections if s not in CHECK_SECTIONS]
        if unknown:
            raise ParseError(f"unknown section(s) {', '.join(unknown)}", field="sections")
        modules, catalog = self._catalogs(loaded, config)
        runners: Dict[str, Callable[[], List[CheckRow]]] = {
            "foundations": lambda: foundation_rows(modules, catalog, config.get("seed")),
            "tau": lambda: tau_rows(catalog),
            "sequences": lambda: sequence_rows(modules, catalog),
            "middle": lambda: middle_rows(modules, catalog),
            "quiver": lambda: quiver_rows(modules, catalog, loaded.symmetric),
        }
        ordered = [s for s in CHECK_SECTIONS if s in sections]
        with ThreadPoolExecutor(max_workers=settings.WORKERS) as executor:
            futures = {s: executor.submit(runners[s]) for s in ordered}
            rows = [row for s in ordered for row in futures[s].result()]
        for s in ordered:
            failed = sum(1 for row in rows if row["section"] == s and not row["passed"])
            logging.info(f"[check-paper] section {s}: {failed} failure(s)")
        return rows, [f"sections: {', '.join(ordered)}"], {}
