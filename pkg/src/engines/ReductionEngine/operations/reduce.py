# src/engines/ReductionEngine/operations/reduce.py
"""
Операция `reduce`.

Выход:
  - presentation: число переменных и уравнений исходного представления;
  - reduced: убитые переменные, подстановки, остаток, свободные переменные, флаг;
  - decomposition: аффинный ранг и остаточные факторы;
  - affine_space: ранг, если остаток пуст, иначе null;
  - confirmed: совпадение чисел F_p-точек до и после (null — перебор не выполнялся).
"""

from src.engines.operations_base import BaseOperation, OperationKind
from src.model.engine_result import EngineResult
from src.services.reduction_service.decompose import decompose, is_affine_space
from src.services.reduction_service.heuristic import heuristic_reduce
from src.services.zeta_service.assembly import confirm_reduction


class Operation(BaseOperation):
    kind = OperationKind.DIRECT
    stage = "reduction"
    description = "Эвристическая редукция A_n(X, p) или ∇_fat X и разложение на аффинную часть и факторы."
    params_schema = {
        "scheme": {"type": "SchemeSpec", "required": True},
        "order": {"type": "int", "required": False},
        "fat": {"type": "FatPointSpec", "required": False},
        "certify": {"type": "bool", "required": False},
    }
    outputs_schema = {
        "presentation": "dict",
        "reduced": "dict",
        "decomposition": "dict",
        "affine_space": "int|null",
        "confirmed": "bool|null",
    }

    def run(self, params, context, engine):
        job = self.job(params)
        presentation = engine.presentation(job)
        R = heuristic_reduce(presentation, job.budgets.groebner, certify=job.certify)
        if R.certified:
            confirmed = True
        elif presentation.ring.field.is_prime_field:
            confirmed = None
        else:
            confirmed = confirm_reduction(
                presentation.ideal, R, presentation.source.bad_characteristics, job.budgets.points,
            )
        rank = is_affine_space(R)
        output = {
            "presentation": {
                "variables": len(presentation.variables),
                "equations": len(presentation.generators),
                "construction": presentation.provenance.get("construction"),
            },
            "reduced": R.to_json(),
            "decomposition": decompose(R).to_json(),
            "affine_space": rank,
            "confirmed": confirmed,
        }
        summary = (
            f"Аффинное пространство размерности {rank}" if rank is not None
            else f"Остаток из {len(R.residual)} образующих, свободных переменных {len(R.free)}"
        )
        return EngineResult.ok(stage=self.stage, output=output, summary=summary)
