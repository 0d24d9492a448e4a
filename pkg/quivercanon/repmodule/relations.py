"""Exact verification of the defining relations on computed weight spaces."""

import logging
from typing import Callable, List, Optional

from ..exactalg import LaurentScalar, RatMatrix, quantum_integer
from ..quiver import Quiver, WeightVector
from ..schemas.report import CheckEntry, SuiteReport
from .module import GradedModule, Generator, HighestWeightModule, _shift
from .tensor import TensorModule
from .words import Content


logger = logging.getLogger(__name__)


def verify_relations(
    quiver: Quiver, weight: WeightVector, height: int, weight2: Optional[WeightVector] = None
) -> SuiteReport:
    """Check the K, EF and Serre relations plus integrability up to ``height``.

    With ``weight2`` the checks run on L(weight2) (x) L(weight).
    """
    module: GradedModule
    if weight2 is None:
        module = HighestWeightModule(quiver, weight)
    else:
        module = TensorModule(quiver, weight, weight2)
    return check_module_relations(module, height)


def check_module_relations(module: GradedModule, height: int, suite: str = "relations") -> SuiteReport:
    names = module.quiver.vertices
    n = module.rank
    entries: List[CheckEntry] = []

    def record(check: str, vertices: List[str], content: Optional[Content], test: Callable[[], bool]) -> None:
        try:
            passed = test()
            detail = None if passed else "matrix identity does not hold"
        except Exception as e:
            logger.error(f"Relation {check} on {content} raised: {e}")
            passed, detail = False, f"{type(e).__name__}: {e}"
        entries.append(
            CheckEntry(
                check=check,
                passed=passed,
                vertices=vertices,
                content=list(content) if content is not None else None,
                detail=detail,
            )
        )

    def g(kind: str, i: int, power: int, content: Content) -> RatMatrix:
        return module.generator_matrix(Generator(kind, names[i], power), content)  # type: ignore[arg-type]

    def k(j: int, content: Content) -> RatMatrix:
        unit = WeightVector.unit(names, names[j])
        return module.generator_matrix(Generator.K(unit), content)

    def k_sum(j: int, l: int, content: Content) -> RatMatrix:
        mu = WeightVector(tuple(names), tuple(_unit_sum(n, j, l)))
        return module.generator_matrix(Generator.K(mu), content)

    highest = WeightVector(tuple(names), tuple(module.highest_pairings))
    contents = list(module.contents_up_to(height))
    logger.info(f"Checking relations on {len(contents)} weight spaces of {module!r} up to height {height}")
    for nu in contents:
        dim = module.space(nu).dim
        wt = module.quiver.weight(nu)
        for j in range(n):
            pairing = module.quiver.cartan_pairing(names[j], highest, wt)
            record(
                "a:K_j = v^<j,wt> on the weight space",
                [names[j]],
                nu,
                lambda j=j, pairing=pairing: k(j, nu)
                == RatMatrix.identity(dim).scale(LaurentScalar.monomial(pairing)),
            )
            for l in range(n):
                record(
                    "a:K_j K_l = K_(j+l)",
                    [names[j], names[l]],
                    nu,
                    lambda j=j, l=l: k(j, nu) @ k(l, nu) == k_sum(j, l, nu),
                )
        for i in range(n):
            for j in range(n):
                a_ji = module.cartan[j][i]
                record(
                    "b:K_j E_i = v^<j,i> E_i K_j",
                    [names[j], names[i]],
                    nu,
                    lambda i=i, j=j, a_ji=a_ji: k(j, _shift(nu, i, -1)) @ g("E", i, 1, nu)
                    == (g("E", i, 1, nu) @ k(j, nu)).scale(LaurentScalar.monomial(a_ji)),
                )
                if sum(nu) < height:
                    record(
                        "c:K_j F_i = v^-<j,i> F_i K_j",
                        [names[j], names[i]],
                        nu,
                        lambda i=i, j=j, a_ji=a_ji: k(j, _shift(nu, i, 1)) @ g("F", i, 1, nu)
                        == (g("F", i, 1, nu) @ k(j, nu)).scale(LaurentScalar.monomial(-a_ji)),
                    )
                    record(
                        "d:E_i F_j - F_j E_i = delta_ij [h_i]",
                        [names[i], names[j]],
                        nu,
                        lambda i=i, j=j: _commutator(module, g, i, j, nu),
                    )
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                order = 1 - module.cartan[i][j]
                if sum(nu) + order + 1 <= height:
                    record(
                        "e:Serre relation in F",
                        [names[i], names[j]],
                        nu,
                        lambda i=i, j=j, order=order: _serre(g, "F", i, j, order, nu).is_zero,
                    )
                record(
                    "f:Serre relation in E",
                    [names[i], names[j]],
                    nu,
                    lambda i=i, j=j, order=order: _serre(g, "E", i, j, order, nu).is_zero,
                )
    zero = (0,) * n
    for i in range(n):
        power = module.highest_pairings[i] + 1
        record(
            "integrability: F_i^(<i,lambda>+1) v_lambda = 0",
            [names[i]],
            zero,
            lambda i=i, power=power: module.apply(Generator.F(names[i], power), module.highest_vector()).is_zero,
        )
    passed = all(entry.passed for entry in entries)
    logger.info(f"Relations on {module!r}: {sum(e.passed for e in entries)}/{len(entries)} checks passed")
    return SuiteReport(suite=suite, passed=passed, entries=entries)


def _unit_sum(n: int, j: int, l: int) -> List[int]:
    mu = [0] * n
    mu[j] += 1
    mu[l] += 1
    return mu


def _commutator(module: GradedModule, g: Callable[..., RatMatrix], i: int, j: int, nu: Content) -> bool:
    lhs = g("E", i, 1, _shift(nu, j, 1)) @ g("F", j, 1, nu) - g("F", j, 1, _shift(nu, i, -1)) @ g("E", i, 1, nu)
    if i != j:
        return lhs.is_zero
    dim = module.space(nu).dim
    expected = RatMatrix.identity(dim).scale(quantum_integer(module.weight_pairing(i, nu)))
    return lhs == expected


def _serre(g: Callable[..., RatMatrix], kind: str, i: int, j: int, order: int, nu: Content) -> RatMatrix:
    """sum_{p+q=order} (-1)^p X_i^(p) X_j X_i^(q) on the space of ``nu``."""
    step = 1 if kind == "F" else -1
    total: Optional[RatMatrix] = None
    for p in range(order + 1):
        q = order - p
        first = g(kind, i, q, nu)
        after_q = _shift(nu, i, step * q)
        middle = g(kind, j, 1, after_q)
        after_j = _shift(after_q, j, step)
        term = g(kind, i, p, after_j) @ middle @ first
        if p % 2:
            term = term.scale(-1)
        total = term if total is None else total + term
    return total  # type: ignore[return-value]
