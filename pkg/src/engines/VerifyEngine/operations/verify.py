# src/engines/VerifyEngine/operations/verify.py
from src.engines.operations_base import BaseOperation, OperationKind
from src.model.engine_result import EngineResult
from src.model.errors import VerificationError


class Operation(BaseOperation):
    kind = OperationKind.VALIDATION
    stage = "verification"
    description = (
        "Запуск набора проверок (paper-tables, structure, classes, zeta, properties); "
        "любой проваленный критерий даёт код выхода 5, отчёт возвращается в output."
    )
    params_schema = {"suite": {"type": "str", "required": True}}
    outputs_schema = {"suite": "str", "passed": "int", "failed": "int", "discrepancies": "int", "criteria": "list"}

    def run(self, params, context, engine):
        job = self.job(params)
        report = engine.run_suite(job.suite, job.budgets)
        output = report.to_json()
        if report.ok:
            return EngineResult.ok(
                stage=self.stage,
                output=output,
                summary=f"{job.suite}: {output['passed']} pass, {output['discrepancies']} discrepancy",
            )
        failed = [c["name"] for c in report.criteria if c["status"] == "fail"]
        exc = VerificationError(
            f"Набор {job.suite}: провалено критериев {len(failed)}",
            details={"suite": job.suite, "failed": failed},
        )
        return EngineResult.error(
            exc.message,
            stage=self.stage,
            code=exc.code,
            exit_code=exc.exit_code,
            details=exc.details,
            output=output,
        )
