"""
Volumen de bolas hiperbólicas.

Vol B(r) = ω(n)·∫₀ʳ sinh^{n−1}(u) du, con ω(n) = n·π^{n/2}/Γ(n/2 + 1) el área
de la esfera unidad. Todo se calcula en escala logarítmica: el integrando
se reescala por sinh^{n−1}(r) para que quede acotado por 1.
"""

import math
from functools import lru_cache

import numpy as np
import sympy
from scipy.integrate import quad
from scipy.special import gammaln

from ..nucleo.configuracion import TOLERANCIA_CUADRATURA
from ..utilidades.decoradores import explicacion, validarArgumentos

LOG_2 = math.log(2.0)

# exp() desborda los dobles por encima de este valor
LOG_MAXIMO_DOBLE = math.log(np.finfo(float).max)


def logSinh(x):
    """
    log(sinh x) para x > 0, sin desbordar para x grande.

    Acepta escalares o arreglos de numpy.
    """
    x = np.asarray(x, dtype=float)
    with np.errstate(divide="ignore"):
        pequeno = np.log(np.sinh(np.minimum(x, 1.0)))
    grande = x + np.log1p(-np.exp(-2.0 * np.maximum(x, 1.0))) - LOG_2
    resultado = np.where(x < 1.0, pequeno, grande)
    return float(resultado) if resultado.ndim == 0 else resultado


@validarArgumentos(n='dimension')
def logAreaEsfera(n: int) -> float:
    """log(n·π^{n/2}/Γ(n/2 + 1))."""
    return math.log(n) + 0.5 * n * math.log(math.pi) - float(gammaln(0.5 * n + 1.0))


@explicacion("Área de la esfera unidad S^{n−1} ⊂ ℝⁿ: n·π^{n/2}/Γ(n/2 + 1)")
def areaEsfera(n: int) -> float:
    """
    Ejemplo:
        >>> areaEsfera(2)   # 2π
        6.283185307179586
    """
    return math.exp(logAreaEsfera(n))


@lru_cache(maxsize=65536)
def _logIntegralEscalada(m: int, r: float) -> float:
    """log ∫₀ʳ exp(m·(log sinh u − log sinh r)) du, integrando en (0, 1]."""
    logSinhR = logSinh(r)

    def integrando(u: float) -> float:
        if u <= 0.0:
            return 0.0
        return math.exp(m * (logSinh(u) - logSinhR))

    valor, _ = quad(integrando, 0.0, r, epsabs=0.0, epsrel=TOLERANCIA_CUADRATURA, limit=200)
    return math.log(valor)


@validarArgumentos(n='dimension', r='no_negativo')
def logIntegralSinh(n: int, r: float) -> float:
    """
    log ∫₀ʳ sinh^{n−1}(u) du por cuadratura adaptativa (relativa 1e−12).

    Devuelve −∞ para r = 0.
    """
    if r == 0.0:
        return -math.inf
    m = n - 1
    return m * logSinh(r) + _logIntegralEscalada(m, r)


def logVolumenBola(n: int, r: float) -> float:
    """
    log Vol B(e₁, r) en ℍⁿ.

    Args:
        n: Dimensión (≥ 2)
        r: Radio (≥ 0)

    Returns:
        Logaritmo natural del volumen (−∞ si r = 0)

    Raises:
        ErrorValidacion: Si r < 0 o n < 2
    """
    return logAreaEsfera(n) + logIntegralSinh(n, r)


def volumenBola(n: int, r: float) -> float:
    """
    Volumen de la bola hiperbólica de radio r en ℍⁿ.

    Ejemplo:
        >>> volumenBola(2, 1.0)   # 2π(cosh 1 − 1)
        3.4122...
    """
    logV = logVolumenBola(n, r)
    return math.exp(logV) if logV < LOG_MAXIMO_DOBLE else math.inf


@validarArgumentos(n='dimension', r='no_negativo', digitos=('entero', 15))
def integralSinhExacta(n: int, r: float, digitos: int = 50) -> float:
    """
    ∫₀ʳ sinh^{n−1}(u) du por la expansión binomial exacta.

    sinh^m(u) = 2^{−m} Σⱼ (−1)ʲ C(m,j) e^{(m−2j)u}, integrada término a término
    (el término de exponente 0 integra a u). La suma alterna cancela mucho,
    así que se evalúa en aritmética racional de sympy con `digitos` cifras.
    Sirve como oráculo independiente de la cuadratura.
    """
    m = n - 1
    u = sympy.Rational(r)
    total = sympy.Integer(0)

    for j in range(m + 1):
        exponente = m - 2 * j
        coeficiente = (-1) ** j * sympy.binomial(m, j)
        if exponente == 0:
            termino = u
        else:
            termino = (sympy.exp(exponente * u) - 1) / exponente
        total += coeficiente * termino

    return float((total / sympy.Integer(2) ** m).evalf(digitos))
