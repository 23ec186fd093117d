"""
Comprobaciones aleatorias de cada desigualdad de la que se arma 𝒜(n,k).

- CotasElipticas: ‖A − I‖ ≥ c_k y ‖A − I‖ ≥ cotaInferiorNorma(k, δ)
- CotaEntradas: |aᵢⱼ| ≤ κ(r) si A mueve e₁ a distancia ≤ 2r
- NormaDesdeEntradas: ‖A‖ ≤ d(n+1) si |aᵢⱼ| ≤ d
- PerturbacionProducto: ‖AB⁻¹ − I‖ ≤ L si |aᵢⱼ − bᵢⱼ| < L/((n+1)²K), |bᵢⱼ| ≤ K
- ConteoSeparado: a lo sumo (2q/s + 1)^p puntos de [−q,q]^p separados más de s

Cada clase implementa un ensayo; las funciones comprobar*() las ejecutan
con ejecutarComprobacion() y devuelven el ReporteEnsayo.
"""

import logging
import math
from typing import Any, Dict

import numpy as np

from ..cotas.empaquetamiento import logKappa
from ..geometria.elipticos import (
    constanteCk,
    cotaInferiorNorma,
    distanciaConjuntoFijo,
    muestrearEliptico,
    muestrearTestigoIgualdad,
    normaMenosIdentidad,
)
from ..geometria.lorentz import inversa, isometriaAleatoria, normaOperador
from ..nucleo.base import ComprobacionDesigualdad
from ..nucleo.configuracion import (
    DIMENSION_MAXIMA_CONTEO,
    LIMITE_IMPULSO,
    MAX_REINTENTOS_MUESTREO,
    PRESUPUESTO_CONTEO,
    UMBRAL_DELTA_CERO,
)
from ..nucleo.excepciones import ErrorMuestreo, ErrorValidacion
from ..utilidades.validadores import (
    validarDimension,
    validarEntero,
    validarNoNegativo,
    validarOrden,
    validarPositivo,
    validarRango,
)
from .reporte import ReporteEnsayo, ejecutarComprobacion, holguraInferior, holguraSuperior

registro = logging.getLogger(__name__)

# δ se muestrea log-uniforme en este intervalo: cubre ambas ramas y su cruce
DELTA_MINIMO = 1e-3
DELTA_MAXIMO = 5.0

# Candidatos aleatorios por ensayo en ConteoSeparado
CANDIDATOS_CONTEO = 512

SEMILLA_MAXIMA = 2 ** 32


class CotasElipticas(ComprobacionDesigualdad):
    """
    ‖A − I‖ ≥ c_k y ‖A − I‖ ≥ cotaInferiorNorma(k, δ) para A elíptica de orden k.

    Con dirigido=True cada ensayo usa la configuración de igualdad (un solo
    bloque θ = 2π/k, o −I para k = 2, con δ = 0), y la holgura mínima tiende a 1.
    """
    idLema = "cotas-elipticas"

    def __init__(self, n: int, k: int, dirigido: bool = False) -> None:
        self.n = validarDimension(n)
        self.k = validarOrden(k)
        self.dirigido = bool(dirigido)
        self.ck = constanteCk(self.k)

    def ensayo(self, semilla: int) -> float:
        if self.dirigido:
            elemento = muestrearTestigoIgualdad(self.n, self.k, semilla)
            A = elemento.matriz
            δ = 0.0
        else:
            generador = np.random.default_rng(semilla)
            delta = math.exp(generador.uniform(math.log(DELTA_MINIMO), math.log(DELTA_MAXIMO)))
            elemento = muestrearEliptico(self.n, self.k, delta, int(generador.integers(SEMILLA_MAXIMA)))
            A = elemento.matriz
            δ = distanciaConjuntoFijo(A)

        if δ < UMBRAL_DELTA_CERO:
            δ = 0.0

        norma = normaMenosIdentidad(A)
        return min(
            holguraInferior(norma, self.ck),
            holguraInferior(norma, cotaInferiorNorma(self.k, δ)),
        )

    def describir(self) -> Dict[str, Any]:
        return {"n": self.n, "k": self.k, "steered": self.dirigido}


class CotaEntradas(ComprobacionDesigualdad):
    """
    max|aᵢⱼ| ≤ κ(r) cuando A(B̄(e₁,r)) corta B̄(e₁,r), es decir d(e₁, Ae₁) ≤ 2r.

    La comparación se hace entre logaritmos: para r grande las entradas no
    caben en un doble, pero sus logaritmos sí.
    """
    idLema = "cota-entradas"

    def __init__(self, n: int, r: float) -> None:
        self.n = validarDimension(n)
        self.r = validarPositivo(r, "r")
        validarRango(self.r, None, LIMITE_IMPULSO / 2.0, "r")
        self.logKappa = logKappa(self.r)

    def ensayo(self, semilla: int) -> float:
        A = isometriaAleatoria(self.n, 2.0 * self.r, semilla)
        logEntradaMaxima = math.log(float(np.max(np.abs(A.entradas))))
        return math.exp(self.logKappa - logEntradaMaxima)

    def describir(self) -> Dict[str, Any]:
        return {"n": self.n, "r": self.r}


class NormaDesdeEntradas(ComprobacionDesigualdad):
    """‖A‖ ≤ d(n+1) para A de tamaño (n+1)×(n+1) con |aᵢⱼ| ≤ d."""
    idLema = "norma-desde-entradas"

    def __init__(self, n: int, d: float) -> None:
        self.n = validarDimension(n)
        self.d = validarNoNegativo(d, "d")

    def ensayo(self, semilla: int) -> float:
        generador = np.random.default_rng(semilla)
        A = generador.uniform(-self.d, self.d, size=(self.n + 1, self.n + 1))
        return holguraSuperior(normaOperador(A), self.d * (self.n + 1))

    def describir(self) -> Dict[str, Any]:
        return {"n": self.n, "d": self.d}


class PerturbacionProducto(ComprobacionDesigualdad):
    """
    ‖AB⁻¹ − I‖ ≤ L para B de Lorentz con |bᵢⱼ| ≤ K y |aᵢⱼ − bᵢⱼ| < L/((n+1)²K).

    A es la perturbación cruda de B, sin proyectarla a O⁺(1,n). En los
    ensayos de semilla impar toda la perturbación va a una sola fila, con
    signos alineados con el vector singular izquierdo dominante de B⁻¹,
    que es donde ‖(A − B)B⁻¹‖ se hace más grande.
    """
    idLema = "perturbacion-producto"

    def __init__(self, n: int, K: float, L: float) -> None:
        self.n = validarDimension(n)
        self.K = validarPositivo(K, "K")
        self.L = validarPositivo(L, "L")
        if self.K < 1.0:
            raise ErrorValidacion("K", f"K debe ser ≥ 1 (toda matriz de Lorentz tiene a₁₁ ≥ 1), recibido: {self.K}")
        if self.K > math.cosh(LIMITE_IMPULSO):
            raise ErrorValidacion("K", f"K es demasiado grande: {self.K}")
        self.delta = self.L / ((self.n + 1) ** 2 * self.K)
        self.traslacionMaxima = math.acosh(self.K)

    def _muestrearB(self, generador: np.random.Generator):
        for _ in range(MAX_REINTENTOS_MUESTREO):
            B = isometriaAleatoria(self.n, self.traslacionMaxima, int(generador.integers(SEMILLA_MAXIMA)))
            if np.max(np.abs(B.entradas)) <= self.K:
                return B
        raise ErrorMuestreo(
            f"No se obtuvo B con entradas ≤ K = {self.K} en {MAX_REINTENTOS_MUESTREO} intentos",
            intentos=MAX_REINTENTOS_MUESTREO,
        )

    def ensayo(self, semilla: int) -> float:
        generador = np.random.default_rng(semilla)
        B = self._muestrearB(generador)
        Binv = inversa(B).entradas
        m = self.n + 1
        # |E| ≤ nextafter(δ, 0) < δ: la hipótesis es estricta
        amplitud = np.nextafter(self.delta, 0.0)

        if semilla % 2 == 1:
            U, _, _ = np.linalg.svd(Binv)
            signos = np.where(U[:, 0] >= 0.0, 1.0, -1.0)
            E = np.zeros((m, m))
            E[int(generador.integers(m))] = amplitud * signos
        else:
            E = amplitud * generador.uniform(-1.0, 1.0, size=(m, m))

        A = B.entradas + E
        return holguraSuperior(normaOperador(A @ Binv - np.eye(m)), self.L)

    def describir(self) -> Dict[str, Any]:
        return {"n": self.n, "K": self.K, "L": self.L}


class ConteoSeparado(ComprobacionDesigualdad):
    """
    Un conjunto de [−q,q]^p cuyos pares difieren más de s en alguna
    coordenada (separación en la métrica del supremo) tiene a lo sumo
    (2q/s + 1)^p puntos.

    Cada ensayo crece un conjunto separado de forma voraz. La mitad de los
    ensayos empieza por la retícula de los ejes con paso apenas mayor que
    s, la configuración más densa; el resto usa solo candidatos aleatorios.
    """
    idLema = "conteo-separado"

    def __init__(self, p: int, q: float, s: float) -> None:
        self.p = validarEntero(p, 1, "p")
        self.q = validarPositivo(q, "q")
        self.s = validarPositivo(s, "s")
        if self.p > DIMENSION_MAXIMA_CONTEO:
            raise ErrorValidacion("p", f"p debe ser ≤ {DIMENSION_MAXIMA_CONTEO}, recibido: {self.p}")

        self.cota = (2.0 * self.q / self.s + 1.0) ** self.p
        if self.cota > PRESUPUESTO_CONTEO:
            raise ErrorValidacion(
                "conteo",
                f"(2q/s + 1)^p = {self.cota:.6g} supera el presupuesto de {PRESUPUESTO_CONTEO:.0e}"
            )

    def _reticula(self) -> np.ndarray:
        eje = np.arange(-self.q, self.q, self.s * (1.0 + 1e-9))
        mallas = np.meshgrid(*([eje] * self.p), indexing="ij")
        return np.stack([malla.ravel() for malla in mallas], axis=1)

    def ensayo(self, semilla: int) -> float:
        generador = np.random.default_rng(semilla)

        if generador.random() < 0.5:
            # Los puntos de la retícula ya están separados entre sí
            puntos = self._reticula()
        else:
            puntos = np.empty((0, self.p))

        candidatos = generador.uniform(-self.q, self.q, size=(CANDIDATOS_CONTEO, self.p))
        for candidato in candidatos:
            if puntos.shape[0] == 0 or np.all(np.max(np.abs(puntos - candidato), axis=1) > self.s):
                puntos = np.vstack([puntos, candidato])

        return holguraSuperior(float(puntos.shape[0]), self.cota)

    def describir(self) -> Dict[str, Any]:
        return {"p": self.p, "q": self.q, "s": self.s}


# ============================================================================
# FUNCIONES DE CONVENIENCIA
# ============================================================================

def comprobarCotasElipticas(n: int, k: int, ensayos: int, semilla: int,
                            dirigido: bool = False, trabajadores: int = 1) -> ReporteEnsayo:
    """
    Verifica ‖A − I‖ ≥ c_k y la cota inf-max en δ sobre elementos elípticos.

    Ejemplo:
        >>> reporte = comprobarCotasElipticas(2, 2, ensayos=100, semilla=0)
        >>> reporte.violaciones
        0
    """
    return ejecutarComprobacion(CotasElipticas(n, k, dirigido), ensayos, semilla, trabajadores)


def comprobarCotaEntradas(n: int, r: float, ensayos: int, semilla: int,
                          trabajadores: int = 1) -> ReporteEnsayo:
    """Verifica |aᵢⱼ| ≤ κ(r) sobre isometrías con traslación ≤ 2r."""
    return ejecutarComprobacion(CotaEntradas(n, r), ensayos, semilla, trabajadores)


def comprobarNormaDesdeEntradas(n: int, d: float, ensayos: int, semilla: int,
                                trabajadores: int = 1) -> ReporteEnsayo:
    """Verifica ‖A‖ ≤ d(n+1) sobre matrices densas con entradas uniformes en [−d, d]."""
    return ejecutarComprobacion(NormaDesdeEntradas(n, d), ensayos, semilla, trabajadores)


def comprobarPerturbacionProducto(n: int, K: float, L: float, ensayos: int, semilla: int,
                                  trabajadores: int = 1) -> ReporteEnsayo:
    """Verifica ‖AB⁻¹ − I‖ ≤ L para perturbaciones entrada a entrada menores que L/((n+1)²K)."""
    return ejecutarComprobacion(PerturbacionProducto(n, K, L), ensayos, semilla, trabajadores)


def comprobarConteoSeparado(p: int, q: float, s: float, ensayos: int, semilla: int,
                            trabajadores: int = 1) -> ReporteEnsayo:
    """
    Verifica |M| ≤ (2q/s + 1)^p sobre conjuntos separados construidos de forma voraz.

    Raises:
        ErrorValidacion: Si p > 4 o (2q/s + 1)^p > 10⁶
    """
    return ejecutarComprobacion(ConteoSeparado(p, q, s), ensayos, semilla, trabajadores)
