"""
Módulo de optimización - La cota 𝒜(n,k) y las cotas de Hurwitz.

𝒜(n,k) = sup_{r>0} Vol B(e₁,r) / (2κ(r)²(n+1)²/c_k + 1)^{(n+1)²}

es una cota inferior del volumen de cualquier n-orbifold hiperbólico cuya
torsión tiene orden ≤ k. El exponente (n+1)² hace que 𝒜 desborde por
abajo a los dobles en cuanto n crece, así que se trabaja con log 𝒜.
"""

import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict

import numpy as np
from scipy.optimize import minimize_scalar

from ..nucleo.configuracion import (
    CIFRAS_SIGNIFICATIVAS,
    PUNTOS_MALLA,
    RADIO_MAXIMO,
    RADIO_MINIMO,
    SATURACION_HURWITZ,
    TOLERANCIA_RADIO,
    ULPS_COCIENTE_HURWITZ,
)
from ..utilidades.decoradores import ayuda, explicacion
from ..utilidades.paralelo import mapearOrdenado
from ..utilidades.validadores import validarDimension, validarEntero, validarOrden, validarPositivo
from .empaquetamiento import logConteoEmpaquetamiento
from .volumen import logVolumenBola

registro = logging.getLogger(__name__)

LOG_10 = math.log(10.0)
EPSILON = float(np.finfo(float).eps)

# Más allá de este logaritmo la cota de Hurwitz supera 2⁶³ y se satura
LOG_SATURACION = 63.0 * math.log(2.0)


@dataclass(frozen=True)
class ConsultaCota:
    """
    Parámetros de 𝒜(n,k).

    Args:
        n: Dimensión (≥ 2)
        k: Orden máximo de la torsión (≥ 2)
    """
    n: int
    k: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "n", validarDimension(self.n))
        object.__setattr__(self, "k", validarOrden(self.k))


@dataclass(frozen=True)
class ResultadoCota:
    """
    Valor de 𝒜(n,k) y sus factores en el radio óptimo.

    Atributos:
        n, k: Parámetros de la consulta
        rEstrella: Radio que maximiza el cociente
        logA: log 𝒜(n,k) (logaritmo natural)
        logVolumenBola: log Vol B(e₁, r*)
        logConteoEmpaquetamiento: log de la cota de empaquetamiento en r*
        evaluaciones: Número de evaluaciones del objetivo
    """
    n: int
    k: int
    rEstrella: float
    logA: float
    logVolumenBola: float
    logConteoEmpaquetamiento: float
    evaluaciones: int

    @property
    def log10A(self) -> float:
        """log₁₀ 𝒜(n,k)."""
        return self.logA / LOG_10

    @property
    def notacionCientifica(self) -> str:
        """𝒜(n,k) como "m×10^e" con 12 cifras significativas."""
        return notacionCientifica(self.log10A)

    def aDiccionario(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "k": self.k,
            "r_star": self.rEstrella,
            "log_A": self.logA,
            "log10_A": self.log10A,
            "A_scientific": self.notacionCientifica,
            "log_ball_volume": self.logVolumenBola,
            "log_packing_count": self.logConteoEmpaquetamiento,
            "optimizer_evals": self.evaluaciones,
        }


def notacionCientifica(log10Valor: float, cifras: int = CIFRAS_SIGNIFICATIVAS) -> str:
    """
    Escribe 10^{log10Valor} como "m×10^e" sin pasar por el valor.

    Ejemplo:
        >>> notacionCientifica(-36.5)
        '3.16227766017×10^-37'
    """
    exponente = math.floor(log10Valor)
    mantisa = round(10.0 ** (log10Valor - exponente), cifras - 1)
    # El redondeo puede llevar la mantisa a 10
    if mantisa >= 10.0:
        mantisa /= 10.0
        exponente += 1
    return f"{mantisa:.{cifras - 1}f}×10^{exponente}"


def logObjetivo(n: int, k: int, r: float) -> float:
    """
    log Vol B(e₁,r) − log(cota de empaquetamiento), el logaritmo del
    cociente cuyo supremo en r es 𝒜(n,k).
    """
    return logVolumenBola(n, r) - logConteoEmpaquetamiento(n, k, r)


@ayuda(
    descripcionMatematica="""
    Cota inferior explícita del volumen de un n-orbifold hiperbólico
    compacto o no, cuya torsión tiene orden a lo sumo k:

        Vol(ℍⁿ/Γ) ≥ 𝒜(n,k) = sup_{r>0} Vol B(e₁,r) / |𝓗(r,Γ)|

    donde |𝓗(r,Γ)| ≤ (2κ(r)²(n+1)²/c_k + 1)^{(n+1)²} cuenta los elementos
    del grupo que no separan la bola B(e₁,r) de sí misma.
    """,
    supuestos=[
        "Γ discreto, sin elementos de torsión de orden mayor que k",
        "no se supone unimodalidad del objetivo en r",
    ],
    ejemplos="""
    >>> resultado = calcularCota(ConsultaCota(n=2, k=2))
    >>> resultado.log10A
    >>> resultado.notacionCientifica
    """,
)
def calcularCota(consulta: ConsultaCota, trabajadores: int = 1) -> ResultadoCota:
    """
    Maximiza logObjetivo(n, k, r) en r.

    Primero una malla geométrica de 512 radios en [1e−4, 60] elige el
    máximo global de la malla; luego una búsqueda de sección áurea sobre
    el intervalo que lo encierra refina r* hasta 1e−10. Si el máximo cae en
    un extremo de la malla (o la sección áurea no encuentra un intervalo
    válido) se conserva el punto de la malla.

    Por debajo de 1e−4 el volumen (∼ rⁿ) hunde el objetivo; por encima de
    60 el log de la cota de empaquetamiento crece como 6r(n+1)² mientras
    el log del volumen crece solo como (n−1)r, así que el objetivo ya
    decrece mucho antes.

    Args:
        consulta: ConsultaCota con n y k
        trabajadores: Hilos para evaluar la malla; el resultado no depende de este valor

    Returns:
        ResultadoCota
    """
    if not isinstance(consulta, ConsultaCota):
        consulta = ConsultaCota(*consulta)
    n, k = consulta.n, consulta.k
    trabajadores = validarEntero(trabajadores, 1, "trabajadores")

    def objetivo(r: float) -> float:
        return logObjetivo(n, k, float(r))

    malla = np.geomspace(RADIO_MINIMO, RADIO_MAXIMO, PUNTOS_MALLA)
    valores = np.array(mapearOrdenado(objetivo, malla, trabajadores))
    evaluaciones = PUNTOS_MALLA

    i = int(np.argmax(valores))
    rEstrella, mejorValor = float(malla[i]), float(valores[i])

    if 0 < i < PUNTOS_MALLA - 1:
        intervalo = (float(malla[i - 1]), rEstrella, float(malla[i + 1]))
        try:
            refinado = minimize_scalar(
                lambda r: -objetivo(r),
                bracket=intervalo,
                method="golden",
                options={"xtol": TOLERANCIA_RADIO / (2.0 * rEstrella)},
            )
        except ValueError as error:
            registro.debug("calcularCota(%d, %d): sección áurea descartada (%s)", n, k, error)
        else:
            evaluaciones += int(refinado.nfev)
            if -float(refinado.fun) > mejorValor:
                rEstrella, mejorValor = float(refinado.x), -float(refinado.fun)
    else:
        registro.debug("calcularCota(%d, %d): máximo en el borde de la malla (índice %d)", n, k, i)

    logV = logVolumenBola(n, rEstrella)
    logP = logConteoEmpaquetamiento(n, k, rEstrella)

    registro.debug(
        "calcularCota(%d, %d): r* = %.12g, log A = %.12g, %d evaluaciones",
        n, k, rEstrella, logV - logP, evaluaciones,
    )

    return ResultadoCota(
        n=n,
        k=k,
        rEstrella=rEstrella,
        logA=logV - logP,
        logVolumenBola=logV,
        logConteoEmpaquetamiento=logP,
        evaluaciones=evaluaciones,
    )


@lru_cache(maxsize=256)
def _cotaCacheada(n: int, k: int) -> ResultadoCota:
    return calcularCota(ConsultaCota(n, k))


def logCocienteHurwitz(volumen: float, n: int, k: int) -> float:
    """
    log(Vol(M)/𝒜(n,k)), finito aunque 𝒜 desborde por abajo.

    Raises:
        ErrorValidacion: Si volumen ≤ 0
    """
    volumen = validarPositivo(volumen, "volumen")
    resultado = _cotaCacheada(validarDimension(n), validarOrden(k))
    return math.log(volumen) - resultado.logA


def _pisoSaturado(logCociente: float, magnitudLog: float) -> int:
    """
    ⌊exp(logCociente)⌋ saturado en 2⁶³.

    logCociente es una diferencia de logaritmos de tamaño magnitudLog, así
    que el cociente lleva un error relativo de unos ULPS_COCIENTE_HURWITZ·ε
    por unidad de magnitudLog. Solo un cociente a esa distancia de un entero
    se toma por ese entero; cualquier otro se trunca.
    """
    if logCociente > LOG_SATURACION:
        registro.info("Cota de Hurwitz saturada: log del cociente = %.6g > 63·log 2", logCociente)
        return SATURACION_HURWITZ

    cociente = math.exp(logCociente)
    entero = round(cociente)
    tolerancia = ULPS_COCIENTE_HURWITZ * EPSILON * max(1.0, magnitudLog) * max(1, entero)
    if abs(cociente - entero) <= tolerancia:
        return min(entero, SATURACION_HURWITZ)
    return min(math.floor(cociente), SATURACION_HURWITZ)


def _magnitudLog(volumen: float, logCociente: float) -> float:
    logVolumen = math.log(volumen)
    return max(abs(logVolumen), abs(logVolumen - logCociente))


@explicacion("Cota de tipo Hurwitz: |G| ≤ Vol(M)/𝒜(n,k) para G actuando por isometrías")
def cotaHurwitz(volumen: float, n: int, k: int) -> int:
    """
    ⌊Vol(M)/𝒜(n,k)⌋, calculado en escala logarítmica.

    Args:
        volumen: Volumen de la variedad (> 0)
        n: Dimensión (≥ 2)
        k: Orden máximo de la torsión (≥ 2)

    Returns:
        La cota entera, o SATURACION_HURWITZ (2⁶³) si la supera

    Raises:
        ErrorValidacion: Si volumen ≤ 0
    """
    logCociente = logCocienteHurwitz(volumen, n, k)
    return _pisoSaturado(logCociente, _magnitudLog(volumen, logCociente))


@explicacion("Cota para Out(π₁(M)): |G| ≤ 2·Vol(M)/𝒜(n,k); el factor 2 cubre la orientación")
def cotaHurwitzOut(volumen: float, n: int, k: int) -> int:
    """
    ⌊2·Vol(M)/𝒜(n,k)⌋, con la misma saturación que cotaHurwitz().
    """
    logCociente = logCocienteHurwitz(volumen, n, k)
    return _pisoSaturado(logCociente + math.log(2.0), _magnitudLog(volumen, logCociente))


def estaSaturada(cota: int) -> bool:
    """True si la cota de Hurwitz es el centinela "supera 2⁶³"."""
    return cota >= SATURACION_HURWITZ
