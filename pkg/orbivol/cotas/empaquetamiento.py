"""
Cota de empaquetamiento: κ(r) y el número de isometrías que no separan
la bola B(e₁, r) de sí misma.

Si A(B̄(e₁,r)) ∩ B̄(e₁,r) ≠ ∅, toda entrada de A cumple |aᵢⱼ| ≤ κ(r), con

    κ(r) = ((1 + cosh r)/sinh r)·√(cosh 6r),

y en un grupo discreto sin torsión de orden > k hay a lo sumo

    (2κ(r)²(n+1)²/c_k + 1)^{(n+1)²}

de esas isometrías. Todo se evalúa en escala logarítmica.
"""

import math

import numpy as np

from ..geometria.elipticos import constanteCk
from ..nucleo.excepciones import ErrorValidacion
from ..utilidades.decoradores import ayuda, validarArgumentos

LOG_2 = math.log(2.0)


def logCosh(x):
    """log(cosh x) = |x| + log1p(e^{−2|x|}) − log 2, estable para |x| grande."""
    x = np.abs(np.asarray(x, dtype=float))
    resultado = x + np.log1p(np.exp(-2.0 * x)) - LOG_2
    return float(resultado) if resultado.ndim == 0 else resultado


def _logCoth(x):
    # log coth x = log1p(e^{−2x}) − log(1 − e^{−2x}), preciso en ambos extremos
    return np.log1p(np.exp(-2.0 * x)) - np.log(-np.expm1(-2.0 * x))


@ayuda(
    descripcionMatematica="""
    Logaritmo de κ(r) = ((1 + cosh r)/sinh r)·√(cosh 6r), la cota de las
    entradas de una isometría que mueve e₁ a distancia ≤ 2r.

    Como (1 + cosh r)/sinh r = coth(r/2), se evalúa como
    log coth(r/2) + ½·log cosh(6r), sin desbordar para r grande.
    """,
    supuestos=["r > 0 (κ(r) → ∞ cuando r → 0⁺)"],
)
def logKappa(r):
    """
    Args:
        r: Radio (> 0), escalar o arreglo de numpy

    Returns:
        log κ(r), del mismo tipo que r

    Raises:
        ErrorValidacion: Si algún r ≤ 0 o no es finito
    """
    radios = np.asarray(r, dtype=float)
    if not np.all(np.isfinite(radios)) or np.any(radios <= 0.0):
        raise ErrorValidacion("r", f"r debe ser positivo y finito, recibido: {r}")

    resultado = _logCoth(0.5 * radios) + 0.5 * logCosh(6.0 * radios)
    return float(resultado) if np.ndim(resultado) == 0 else resultado


@validarArgumentos(n='dimension', k='orden')
def logConteoEmpaquetamiento(n: int, k: int, r):
    """
    (n+1)²·log(2κ(r)²(n+1)²/c_k + 1).

    El logaritmo interior es softplus(log 2 + 2·log κ(r) + 2·log(n+1) − log c_k),
    de modo que ningún intermedio desborda.

    Args:
        n: Dimensión (≥ 2)
        k: Orden máximo de torsión (≥ 2)
        r: Radio (> 0), escalar o arreglo

    Returns:
        Logaritmo natural de la cota de empaquetamiento (siempre > 0)
    """
    exponente = LOG_2 + 2.0 * logKappa(r) + 2.0 * math.log(n + 1) - math.log(constanteCk(k))
    resultado = (n + 1) ** 2 * np.logaddexp(0.0, exponente)
    return float(resultado) if np.ndim(resultado) == 0 else resultado


@validarArgumentos(n='dimension', k='orden', r='positivo')
def logConteoEmpaquetamientoDirecto(n: int, k: int, r: float) -> float:
    """
    La misma cota escrita como en la fórmula cerrada de 𝒜(n,k):

        (n+1)²·log(1 + (e(n+1)(1 + cosh r)/sinh r)²·cosh 6r·sin⁻²(π/k)).

    Coincide algebraicamente con logConteoEmpaquetamiento() (basta expandir
    c_k = 2 sin²(π/k)e⁻²). Se evalúa sin trucos de escala: desborda
    para r ≳ 118.
    """
    exponente = (
        2.0
        + 2.0 * math.log(n + 1)
        + 2.0 * math.log((1.0 + math.cosh(r)) / math.sinh(r))
        + math.log(math.cosh(6.0 * r))
        - 2.0 * math.log(math.sin(math.pi / k))
    )
    return (n + 1) ** 2 * math.log1p(math.exp(exponente))
