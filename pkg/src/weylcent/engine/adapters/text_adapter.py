"""Plain text adapter: the default CLI output."""

import json

from ..centralizer_solver import CentralizerBasis, FractionWitness, LemmaReport, LemmaSuiteReport
from ..modp_certifier import CertificateReport, PrimeOutcome
from ..models import ElementResult
from ..weyl_core import CenterDecomposition
from .base import RenderAdapter, RenderResult, Report


def _flag(value: bool | None) -> str:
    if value is None:
        return "not checked"
    return "true" if value else "false"


class TextAdapter(RenderAdapter):
    """Renders reports as line-oriented text, one fact per line."""

    @property
    def adapter_type(self) -> str:
        return "text"

    @property
    def content_type(self) -> str:
        return "text/plain"

    def render(self, report: Report) -> RenderResult:
        """Render report as text."""
        if isinstance(report, ElementResult):
            lines = [str(report.element)]
        elif isinstance(report, CentralizerBasis):
            lines = self._centralizer(report)
        elif isinstance(report, CenterDecomposition):
            lines = [f"({i},{j}): {z}" for (i, j), z in sorted(report.parts.items())] or ["0"]
        elif isinstance(report, FractionWitness):
            lines = [
                f"z1: {report.z1}",
                f"z2: {report.z2}",
                f"verified: {_flag(report.b * report.z2 == report.z1)}",
            ]
        elif isinstance(report, CertificateReport):
            lines = self._certificate(report)
        elif isinstance(report, LemmaReport):
            lines = self._centralizer(report.centralizer)
            lines.append(f"Z[a] contained: {_flag(report.za_contained)}")
            for b, w in report.witnesses.items():
                lines.append(f"{b} = ({w.z1}) / ({w.z2})" if w else f"{b}: no witness")
        elif isinstance(report, LemmaSuiteReport):
            lines = [
                f"{s.a}: basis={s.basis_size} commutative={_flag(s.commutative)}"
                for s in report.samples
            ]
            lines.append(f"all commutative: {_flag(report.all_commutative)}")
        else:
            lines = [json.dumps(report.to_dict(), indent=2)]

        return RenderResult(
            adapter_type=self.adapter_type,
            content="\n".join(lines),
            content_type=self.content_type,
            metadata={"report": type(report).__name__},
        )

    def _centralizer(self, report: CentralizerBasis) -> list[str]:
        lines = [str(b) for b in report.basis]
        lines.append(f"commutative: {_flag(report.commutative)}")
        if report.witness is not None:
            lines.append(f"witness: {report.witness[0]}, {report.witness[1]}")
        return lines

    def _certificate(self, report: CertificateReport) -> list[str]:
        lines = [
            f"verdict: {report.verdict.value}",
            f"majorant bound: {report.majorant_bound}",
            f"certified modulus: {report.certified_modulus}",
        ]
        if report.good_prime_filter is not None:
            f = report.good_prime_filter
            lines.append(f"u: {f.u} (n = {f.n}, N = {f.N})")
        lines.extend(self._prime_line(o) for o in report.primes_used)
        if report.cross_check is not None:
            lines.append(f"cross-check: [P, Q] = {report.cross_check['commutator']}")
        if report.reason:
            lines.append(f"reason: {report.reason}")
        return lines

    def _prime_line(self, outcome: PrimeOutcome) -> str:
        line = f"prime {outcome.prime}: {outcome.status.value}"
        if outcome.reason:
            line += f" ({outcome.reason})"
        if outcome.trace is not None:
            t = outcome.trace
            line += (
                f" [tot(a)={t['tot_a']}, a central={_flag(t['a_central'])},"
                f" [a,P]=0: {_flag(t['a_commutes_P'])}, [a,Q]=0: {_flag(t['a_commutes_Q'])},"
                f" [P,Q]=0: {_flag(t['P_commutes_Q'])}]"
            )
        return line
