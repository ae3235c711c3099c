"""
Verifieringstjänst - acceptanssviten som namngivna kontroller

Varje kontroll ger ett CheckResult med utfall pass, fail eller report-only.
"""
import logging
import random
from dataclasses import dataclass, field
from typing import Callable, Optional

from app.config import (
    GRAPH_MAX_GENUS,
    MIN_GENERATOR_COUNT,
    MIN_RELATION_GENUS,
    RANDOM_COORD_BOUND,
    RANDOM_SAMPLES,
    RANDOM_SEED,
    CLAIMED_GENERATOR_COUNT,
    RelationName,
    Verdict,
)
from app.exceptions import NoRewriteRuleError
from app.models.chain import ChainNotation
from app.models.homology import HomologyClass
from app.services.bcj_sigma import act_bool, sigma_chainmap, sigma_relation_defect, sigma_word, w_membership
from app.services.chains import (
    conjugate_by_b,
    conjugate_by_twist,
    enumerate_generators,
    expand_subchain,
)
from app.services.johnson_tau import (
    act_wedge3,
    model_twist,
    tau_chainmap,
    tau_relation_defect,
    tau_word,
    wedge,
)
from app.services.span_lab import (
    closure_for_size,
    cubic_count_report,
    disjointness_graph,
    expected_sigma_dim,
    expected_tau_dim,
    is_connected,
    span_dim_F2,
    span_dim_Q,
)
from app.services.surface import build_surface, generator_support_cover
from app.services.symplectic import (
    matrix_apply,
    pairing,
    random_class,
    random_primitive_class,
    sp_membership,
    transvection_matrix,
)

logger = logging.getLogger(__name__)


@dataclass
class CheckResult:
    """Utfall av en kontroll"""
    name: str
    verdict: Verdict
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.verdict != Verdict.FAIL

    def to_dict(self) -> dict:
        return {"name": self.name, "verdict": self.verdict.value, "details": self.details}


def _verdict(ok: bool) -> Verdict:
    return Verdict.PASS if ok else Verdict.FAIL


class VerificationService:
    """
    Tjänst för acceptanskontroller vid ett givet genus

    Hanterar:
    - symplektiska egenskaper och transvektionsankaret
    - kedjekalkyl och omskrivningarnas sundhet
    - relationer under τ och σ
    - rangkontroller, W-kompatibilitet, banslutning och grafer
    """

    def __init__(self, genus: int, seed: int = RANDOM_SEED):
        self.genus = genus
        self.seed = seed
        self.model = build_surface(genus, 2)
        self._generators: Optional[list[ChainNotation]] = None

    @property
    def generators(self) -> list[ChainNotation]:
        if self._generators is None:
            self._generators = enumerate_generators(self.genus)
        return self._generators

    # === SYMPLEKTISKT ===

    def symplectic_suite(self, samples: int = RANDOM_SAMPLES, max_genus: int = 5) -> CheckResult:
        """Antisymmetri, alternering och att transvektioner är symplektiska"""
        rng = random.Random(self.seed)
        failures = 0
        for _ in range(samples):
            rank = 2 * rng.randint(1, max_genus) + 2
            u = random_class(rank, rng, RANDOM_COORD_BOUND)
            v = random_class(rank, rng, RANDOM_COORD_BOUND)
            c = random_primitive_class(rank, rng, RANDOM_COORD_BOUND)
            ok = (
                pairing(u, v) == -pairing(v, u)
                and pairing(u, u) == 0
                and sp_membership(transvection_matrix(c))
            )
            failures += 0 if ok else 1
        return CheckResult("symplectic-suite", _verdict(failures == 0), {"samples": samples, "failures": failures})

    def transvection_anchor(self) -> CheckResult:
        """
        Transvektionen längs y_g - y_{g-1} skickar x_g till x_g + y_g - y_{g-1};
        vridningen (dess invers) ger x_g∧y_g∧y_{g+1} + y_{g-1}∧y_g∧y_{g+1} på ⋀³
        """
        g, rank = self.genus, self.model.rank
        x_g = HomologyClass.basis(rank, f"x{g}")
        y_g = HomologyClass.basis(rank, f"y{g}")
        y_prev = HomologyClass.basis(rank, f"y{g - 1}")
        y_top = HomologyClass.basis(rank, f"y{g + 1}")
        c = y_g - y_prev
        matrix_ok = matrix_apply(transvection_matrix(c), x_g) == x_g + y_g - y_prev
        twist = transvection_matrix(c, -1)
        image = act_wedge3(twist, wedge(x_g, y_g, y_top))
        wedge_ok = image == wedge(x_g, y_g, y_top) + wedge(y_prev, y_g, y_top)
        return CheckResult("transvection-anchor", _verdict(matrix_ok and wedge_ok),
                           {"matrix": matrix_ok, "wedge": wedge_ok})

    # === KEDJOR ===

    def chain_calculus(self) -> CheckResult:
        """(1346) och randklassernas ortogonalitet för alla generatorer"""
        m = self.model
        expected = (
            m.chain_curve(1) + m.chain_curve(2),
            m.chain_curve(3),
            m.chain_curve(4) + m.chain_curve(5),
        )
        example_ok = expand_subchain(ChainNotation((1, 3, 4, 6)), m).curves == expected
        bad = 0
        for n in self.generators:
            chain = expand_subchain(n, m)
            if any(chain.boundary_class.pair(a) for a in chain.curves):
                bad += 1
        full = expand_subchain(ChainNotation(tuple(range(1, m.max_index + 1))), m)
        full_ok = full.boundary_class == m.curve("d1")
        return CheckResult("chain-calculus", _verdict(example_ok and full_ok and bad == 0),
                           {"example": example_ok, "full_chain_boundary": full_ok, "failures": bad})

    def generator_count(self) -> CheckResult:
        count = len(self.generators)
        beta = sum(1 for n in self.generators if n.beta)
        details = {
            "count": count,
            "beta_chains": beta,
            "claimed": CLAIMED_GENERATOR_COUNT,
            "lower_bound": MIN_GENERATOR_COUNT,
        }
        if self.genus == MIN_RELATION_GENUS:
            return CheckResult("generator-count", _verdict(count >= MIN_GENERATOR_COUNT), details)
        details["cubic"] = cubic_count_report(self.genus, len(enumerate_generators(MIN_RELATION_GENUS)))
        return CheckResult("generator-count", Verdict.REPORT_ONLY, details)

    def rewrite_soundness(self) -> CheckResult:
        """
        τ och σ av varje omskrivning är lika med Sp-verkan på τ(n) och σ(n)

        Kommuterande par kontrolleras också: där ska verkan fixera τ(n).
        """
        m = self.model
        checked = skipped = failures = 0
        closure_failures = 0
        generator_set = set(self.generators)
        for n in self.generators:
            chain = expand_subchain(n, m)
            tau_n, sigma_n = tau_chainmap(chain), sigma_chainmap(chain)
            for j in range(1, m.chain_length + 1):
                for sign in (1, -1):
                    try:
                        word = conjugate_by_twist(j, sign, n, m.max_index)
                    except NoRewriteRuleError:
                        skipped += 1
                        continue
                    matrix = model_twist(m, f"c{j}", sign)
                    checked += 1
                    if tau_word(word, m) != act_wedge3(matrix, tau_n) or sigma_word(word, m) != act_bool(matrix, sigma_n):
                        failures += 1
                    if len(word) == 1 and word.tokens[0].generator not in generator_set:
                        closure_failures += 1
            for sign in (1, -1):
                try:
                    word = conjugate_by_b(sign, n)
                except NoRewriteRuleError:
                    skipped += 1
                    continue
                matrix = model_twist(m, "b", sign)
                checked += 1
                if tau_word(word, m) != act_wedge3(matrix, tau_n) or sigma_word(word, m) != act_bool(matrix, sigma_n):
                    failures += 1
        details = {"checked": checked, "no_rule": skipped, "failures": failures, "closure_failures": closure_failures}
        return CheckResult("rewrite-soundness", _verdict(failures == 0 and closure_failures == 0), details)

    # === RELATIONER ===

    def relations(self) -> CheckResult:
        """J1, J2 för 3 ≤ k ≤ g, J3 för 3 ≤ k ≤ g+1 och lyktrelationen"""
        g = self.genus
        cases = [(RelationName.J1, k) for k in range(3, g + 1)]
        cases += [(RelationName.J2, k) for k in range(3, g + 1)]
        cases += [(RelationName.J3, k) for k in range(3, g + 2)]
        cases += [(RelationName.LANTERN, k) for k in range(2, g + 1)]
        results = {}
        for name, k in cases:
            tau_ok = tau_relation_defect(name, k, self.model).is_zero()
            sigma_ok = sigma_relation_defect(name, k, self.model).is_zero()
            results[f"{name.value}:k={k}"] = tau_ok and sigma_ok
        return CheckResult("relations", _verdict(all(results.values())), results)

    # === RANG OCH SPANN ===

    def abelianization_ranks(self) -> CheckResult:
        m = self.model
        chains = [expand_subchain(n, m) for n in self.generators]
        tau_dim = span_dim_Q(tau_chainmap(c) for c in chains)
        sigma_dim = span_dim_F2(sigma_chainmap(c) for c in chains)
        details = {
            "tau": {"computed": tau_dim, "expected": expected_tau_dim(self.genus)},
            "sigma": {"computed": sigma_dim, "expected": expected_sigma_dim(self.genus)},
        }
        ok = tau_dim == expected_tau_dim(self.genus) and sigma_dim == expected_sigma_dim(self.genus)
        return CheckResult("abelianization-ranks", _verdict(ok), details)

    def one_boundary_ranks(self) -> CheckResult:
        """Samma generatorer i Σ_{g,1}: C(2g,3) och Σ_{i≤3} C(2g,i)"""
        model = build_surface(self.genus, 1)
        chains = [expand_subchain(n, model) for n in self.generators]
        tau_dim = span_dim_Q(tau_chainmap(c) for c in chains)
        sigma_dim = span_dim_F2(sigma_chainmap(c) for c in chains)
        expected_tau = expected_tau_dim(self.genus, 1)
        expected_sigma = expected_sigma_dim(self.genus, 1)
        details = {
            "tau": {"computed": tau_dim, "expected": expected_tau},
            "sigma": {"computed": sigma_dim, "expected": expected_sigma},
        }
        return CheckResult("one-boundary-ranks",
                           _verdict(tau_dim == expected_tau and sigma_dim == expected_sigma), details)

    def w_compatibility(self) -> CheckResult:
        """a(τ(n)) = b(σ(n)) och inga tripler med x_{g+1}"""
        m = self.model
        x_top = m.handle_count - 1
        mismatches = leaks = 0
        for n in self.generators:
            chain = expand_subchain(n, m)
            tau_n = tau_chainmap(chain)
            if not w_membership(tau_n, sigma_chainmap(chain)):
                mismatches += 1
            if tau_n.involves(x_top):
                leaks += 1
        return CheckResult("w-compatibility", _verdict(mismatches == 0 and leaks == 0),
                           {"mismatches": mismatches, "x_boundary_triples": leaks})

    def orbit_closure(self) -> CheckResult:
        """|I| = 1 räcker inte, |I| = 2 når hela ⋀³V_Z"""
        target = expected_tau_dim(self.genus)
        single, _ = closure_for_size(self.genus, 1)
        pair, rounds = closure_for_size(self.genus, 2)
        details = {"target": target, "size_1": single, "size_2": pair, "rounds": rounds}
        return CheckResult("orbit-closure", _verdict(single < target and pair == target and rounds <= target), details)

    def graph_connectivity(self, max_genus: int = GRAPH_MAX_GENUS) -> CheckResult:
        """Disjunkthetsgrafen är sammanhängande när 2m+1 ≤ g"""
        results = {}
        for g in range(3, max_genus + 1):
            for m in range(1, (g - 1) // 2 + 1):
                results[f"g={g}:m={m}"] = is_connected(disjointness_graph(g, m))
        return CheckResult("graph-connectivity", _verdict(all(results.values())), results)

    def support_cover(self, max_genus: int = 6) -> CheckResult:
        results = {f"g={g}": generator_support_cover(g, 2) for g in range(3, max_genus + 1)}
        return CheckResult("support-cover", _verdict(all(results.values())), results)

    def run_all(self) -> list[CheckResult]:
        checks: list[Callable[[], CheckResult]] = [
            self.symplectic_suite,
            self.transvection_anchor,
            self.chain_calculus,
            self.generator_count,
            self.rewrite_soundness,
            self.relations,
            self.abelianization_ranks,
            self.one_boundary_ranks,
            self.w_compatibility,
            self.orbit_closure,
            self.graph_connectivity,
            self.support_cover,
        ]
        results = []
        for check in checks:
            result = check()
            logger.info("%s: %s", result.name, result.verdict.value)
            results.append(result)
        return results
