# Copyright (c) 2025 Tsutomu FUNADA
# This software is licensed for:
#   - Non-commercial use under the MIT License (see LICENSE-NC.txt)
#   - Commercial use requires a separate commercial license (contact author)
# You may not use this software for commercial purposes under the MIT License.

from algebra.records import LoadedAlgebra
from config.types import MiddleClaim
from models.errors import HypothesisError
from models.types import RunConfig
from morphism.decompose import decompose_H
from morphism.labels import object_label
from morphism.records import parse_object
from sequences.builders import ass_H_ending_at
from sequences.middle import analyze_middle
from sequences.verify import is_almost_split_H
from services.base_service import BaseService, Outcome


class AssService(BaseService):
    """The almost split sequence of H(Λ) ending at one object, verified and analysed."""

    def __init__(self, backend):
        super().__init__(backend, "ass")

    def _execute(self, loaded: LoadedAlgebra, config: RunConfig) -> Outcome:
        x = parse_object(loaded, self._require(config, "object"))
        name = loaded.algebra.name
        _, catalog = self._catalogs(loaded, config)
        seq = ass_H_ending_at(x, catalog)
        middle = []
        for part, k in decompose_H(seq.middle):
            middle.extend([catalog.name_of(part)] * k)
        rows = [
            self._row("ass_H_ending_at", name, repr(seq)),
            self._row("is_almost_split_H", name, "verified", is_almost_split_H(seq, catalog)),
        ]
        notes = []
        for claim in MiddleClaim:
            try:
                report = analyze_middle(seq, claim, catalog)
            except HypothesisError as e:
                notes.append(f"{claim.value} not applicable: {e.hypothesis}")
                continue
            flags = ", ".join(k for k, v in sorted(report.flags.items()) if v) or "none"
            rows.append(self._row(f"middle_{claim.value}", name, f"flags: {flags}", report.holds))
        extra = {
            "source": object_label(seq.source),
            "middle": middle,
            "target": object_label(seq.target),
        }
        return rows, notes, extra
