# Copyright (c) 2025 Tsutomu FUNADA
# This software is licensed for:
#   - Non-commercial use under the MIT License (see LICENSE-NC.txt)
#   - Commercial use requires a separate commercial license (contact author)
# You may not use this software for commercial purposes under the MIT License.

from algebra.records import LoadedAlgebra
from config.types import ClosedForm
from models.errors import HypothesisError
from models.types import RunConfig
from morphism.decompose import is_isomorphic_H
from morphism.functors import tau_H_closed_form, tau_H_general, tau_H_via_t2
from morphism.labels import object_label
from morphism.records import parse_object
from services.base_service import BaseService, Outcome


class TauHService(BaseService):
    """τ_H^i of one object, compared with the T2 translate and the applicable closed forms."""

    def __init__(self, backend):
        super().__init__(backend, "tau-h")

    def _execute(self, loaded: LoadedAlgebra, config: RunConfig) -> Outcome:
        x = parse_object(loaded, self._require(config, "object"))
        power = config.get("power", 1)
        name = loaded.algebra.name
        general = tau_H_general(x, power)
        oracle = tau_H_via_t2(x, power)
        rows = [
            self._row(f"tau_H^{power}", name, object_label(general)),
            self._row("t2_oracle", name, object_label(oracle), is_isomorphic_H(general, oracle)),
        ]
        notes = []
        if power == 1:
            for form in ClosedForm:
                try:
                    closed = tau_H_closed_form(x, form)
                except HypothesisError as e:
                    notes.append(f"{form.value} not applicable: {e.hypothesis}")
                    continue
                agree = is_isomorphic_H(general, closed)
                rows.append(self._row(f"closed_form[{form.value}]", name, object_label(closed), agree))
        return rows, notes, {"object": object_label(x)}
