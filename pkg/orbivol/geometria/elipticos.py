"""
Módulo de elementos elípticos - Isometrías de orden finito.

Contiene:
- EspecificacionEliptica, ElementoEliptico: datos de la forma canónica
- formaBloques(): matriz canónica diag(1, R(θ₁), …, R(θ_l), −I_s, I_t)
- ordenDe(): orden exacto de una isometría (o None)
- muestrearEliptico(): elementos de orden exacto k a distancia δ de e₁
- distanciaConjuntoFijo(): distancia de e₁ al conjunto fijo en ℍⁿ
- constanteCk(), cotaInferiorNorma(), constanteJorgensen(): las cotas
  inferiores de ‖A − I‖ y las constantes que las acompañan
"""

import logging
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Dict, Optional, Tuple

import numpy as np
from scipy.optimize import bisect, brentq

from ..nucleo.configuracion import (
    MAX_REINTENTOS_MUESTREO,
    PERIODO_REORTOGONALIZACION,
    TOLERANCIA_IDENTIDAD,
    UMBRAL_ESPACIO_FIJO,
)
from ..nucleo.excepciones import ErrorInvariante, ErrorMuestreo, ErrorValidacion
from ..utilidades.decoradores import ayuda, explicacion, validarArgumentos
from ..utilidades.validadores import validarDimension, validarEntero, validarNoNegativo, validarOrden
from .lorentz import (
    MatrizLike,
    MatrizLorentz,
    PuntoHiperbolico,
    VectorMinkowski,
    _comoArreglo,
    distancia,
    formaMinkowski,
    impulso,
    incrustarRotacion,
    inversa,
    normaOperador,
    puntoBase,
    reortogonalizar,
    rotacionAleatoria,
)

registro = logging.getLogger(__name__)


# ============================================================================
# TIPOS
# ============================================================================

@ayuda(
    descripcionMatematica="""
    Forma canónica de un elemento de E(n) ≅ O(n), el estabilizador de e₁:
    salvo conjugación en E(n), todo elemento es diagonal por bloques con
    l rotaciones R(θᵢ), s reflexiones (−1) y t ejes fijos (+1).
    """,
    supuestos=[
        "2·l + s + t = n",
        "cada θᵢ estrictamente dentro de (0, π)",
    ],
)

@dataclass(frozen=True)
class EspecificacionEliptica:
    """
    Datos de la forma canónica por bloques.

    Args:
        n: Dimensión (≥ 2)
        angulos: Ángulos θᵢ ∈ (0, π) en radianes
        reflexiones: Número s de valores propios −1
        fijos: Número t de valores propios +1 además del temporal

    Raises:
        ErrorValidacion: Si algún ángulo sale de (0, π) o las cuentas no suman n
    """
    n: int
    angulos: Tuple[float, ...] = ()
    reflexiones: int = 0
    fijos: int = 0

    def __post_init__(self) -> None:
        n = validarDimension(self.n)
        s = validarEntero(self.reflexiones, 0, "reflexiones")
        t = validarEntero(self.fijos, 0, "fijos")
        angulos = tuple(float(θ) for θ in self.angulos)

        for θ in angulos:
            if not (0.0 < θ < math.pi):
                raise ErrorValidacion("angulos", f"Cada ángulo debe estar en (0, π), recibido: {θ}")

        if 2 * len(angulos) + s + t != n:
            raise ErrorValidacion(
                "especificacion",
                f"2·{len(angulos)} + {s} + {t} ≠ n = {n}"
            )

        object.__setattr__(self, "n", n)
        object.__setattr__(self, "reflexiones", s)
        object.__setattr__(self, "fijos", t)
        object.__setattr__(self, "angulos", angulos)


@dataclass(frozen=True, eq=False)
class ElementoEliptico:
    """
    Isometría de orden finito con su orden exacto y la distancia δ de e₁
    a su conjunto fijo.

    Atributos:
        matriz: La isometría
        orden: Orden exacto m (matriz^m = I y ninguna potencia menor)
        delta: Distancia hiperbólica de e₁ a Fix(A)
        especificacion: Forma canónica de la que se obtuvo por conjugación
    """
    matriz: MatrizLorentz
    orden: int
    delta: float
    especificacion: Optional[EspecificacionEliptica] = field(default=None)

    def __post_init__(self) -> None:
        orden = validarEntero(self.orden, 1, "orden")
        object.__setattr__(self, "delta", validarNoNegativo(self.delta, "delta"))

        if not isinstance(self.matriz, MatrizLorentz):
            object.__setattr__(self, "matriz", MatrizLorentz(self.matriz))

        if self.especificacion is not None and self.especificacion.n != self.matriz.dimension:
            raise ErrorInvariante(
                "elemento elíptico",
                f"La especificación es de dimensión {self.especificacion.n} y la matriz de {self.matriz.dimension}"
            )

        # Conjugar por B = Â·T(δ) amplía el redondeo de Aᵐ hasta un factor max|A|² ≈ e^{4δ}
        M = self.matriz.entradas
        escala = max(1.0, float(np.max(np.abs(M))))
        residuo = float(np.max(np.abs(np.linalg.matrix_power(M, orden) - np.eye(M.shape[0]))))
        if residuo >= TOLERANCIA_IDENTIDAD * escala ** 2:
            raise ErrorInvariante(
                "elemento elíptico",
                f"Orden declarado {orden}, pero max|A^{orden} − I| = {residuo:.3e}: no es el orden exacto"
            )

        # Las potencias menores se comparan sobre la forma canónica, que no arrastra el conjugador
        if self.especificacion is not None:
            exacto = ordenDe(formaBloques(self.especificacion), orden)
        else:
            menor = ordenDe(M, orden - 1, TOLERANCIA_IDENTIDAD * escala) if orden > 1 else None
            exacto = orden if menor is None else menor
        if exacto != orden:
            raise ErrorInvariante(
                "elemento elíptico",
                f"Orden declarado {orden}, pero el orden exacto es {exacto if exacto is not None else 'distinto'}"
            )


# ============================================================================
# FORMA CANÓNICA Y ORDEN
# ============================================================================

def formaBloques(especificacion: EspecificacionEliptica) -> MatrizLorentz:
    """
    Matriz canónica diag(1, R(θ₁), …, R(θ_l), −I_s, I_t).

    Cada bloque es R(θ) = [[cos θ, −sin θ], [sin θ, cos θ]], en ese orden.

    Ejemplo:
        >>> esp = EspecificacionEliptica(2, angulos=(np.pi / 2,))
        >>> formaBloques(esp).entradas
        # diag(1, [[0, −1], [1, 0]])
    """
    if not isinstance(especificacion, EspecificacionEliptica):
        raise ErrorValidacion("especificacion", "Se esperaba una EspecificacionEliptica")

    A = np.eye(especificacion.n + 1)
    indice = 1
    for θ in especificacion.angulos:
        c, s = math.cos(θ), math.sin(θ)
        A[indice:indice + 2, indice:indice + 2] = [[c, -s], [s, c]]
        indice += 2

    for _ in range(especificacion.reflexiones):
        A[indice, indice] = -1.0
        indice += 1

    return MatrizLorentz(A)


def ordenDe(A: MatrizLike, kMax: int, tolerancia: float = TOLERANCIA_IDENTIDAD) -> Optional[int]:
    """
    Menor m ≤ kMax con max|Aᵐ − I| < tolerancia (1e−8), o None si no existe.

    Las potencias se acumulan por multiplicación sucesiva y cada 16 pasos
    se reortogonalizan contra O(1,n) para frenar la deriva de redondeo.

    Args:
        A: Isometría (MatrizLorentz o matriz)
        kMax: Mayor orden a probar (≥ 1)
        tolerancia: Distancia máxima por entrada a la identidad

    Returns:
        El orden, o None si A no tiene orden ≤ kMax
    """
    kMax = validarEntero(kMax, 1, "kMax")
    M = _comoArreglo(A)
    identidad = np.eye(M.shape[0])
    potencia = M.copy()

    with np.errstate(over="ignore", invalid="ignore"):
        for m in range(1, kMax + 1):
            if not np.all(np.isfinite(potencia)):
                return None
            if np.max(np.abs(potencia - identidad)) < tolerancia:
                return m
            potencia = potencia @ M
            if m % PERIODO_REORTOGONALIZACION == 0:
                potencia = reortogonalizar(potencia)

    return None


# ============================================================================
# MUESTREO
# ============================================================================

def _especificacionAleatoria(n: int, k: int, generador: np.random.Generator) -> EspecificacionEliptica:
    """
    Candidato a forma canónica de orden k.

    Ángulos θᵢ = 2π·mᵢ/k con mᵢ ∈ {1, …, ⌊(k−1)/2⌋}; las reflexiones (orden 2)
    solo se permiten si k es par. Para k = 2 no hay ángulos en (0, π) y el
    elemento es una reflexión pura con s ≥ 1.
    """
    if k == 2:
        s = int(generador.integers(1, n + 1))
        return EspecificacionEliptica(n, (), s, n - s)

    l = int(generador.integers(1, n // 2 + 1))
    mMax = (k - 1) // 2
    multiplos = generador.integers(1, mMax + 1, size=l)
    angulos = tuple(2.0 * math.pi * int(m) / k for m in multiplos)

    libres = n - 2 * l
    s = int(generador.integers(0, libres + 1)) if k % 2 == 0 else 0
    return EspecificacionEliptica(n, angulos, s, libres - s)


def _conjugadorAleatorio(n: int, delta: float, generador: np.random.Generator) -> MatrizLorentz:
    """B = Â·T(δ) con Â ∈ E(n) aleatoria; B·e₁ está a distancia δ de e₁."""
    Ahat = incrustarRotacion(rotacionAleatoria(n, generador))
    return Ahat @ impulso(delta, n)


@explicacion("Elemento elíptico de orden exacto k: A = B·A′·B⁻¹ con B = Â·T(δ)")
def muestrearEliptico(n: int, k: int, delta: float, semilla: int) -> ElementoEliptico:
    """
    Muestra un elemento elíptico de orden exacto k.

    Se sortea una forma canónica A′ con ángulos 2π·mᵢ/k, se comprueba con
    ordenDe() que su orden es exactamente k (si no, se vuelve a sortear) y
    se conjuga por B = Â·T(δ). El punto B·e₁, que está a distancia δ de e₁,
    queda fijo. Si A′ solo fija e₁ (t = 0) la distancia al conjunto fijo es
    δ; en otro caso el conjunto fijo es mayor y se recalcula con
    distanciaConjuntoFijo().

    Args:
        n: Dimensión (≥ 2)
        k: Orden exacto (≥ 2)
        delta: Traslación del conjugador (≥ 0)
        semilla: Semilla entera (≥ 0)

    Returns:
        ElementoEliptico

    Raises:
        ErrorValidacion: Si k < 2, n < 2 o delta < 0
        ErrorMuestreo: Si se agotan los reintentos
    """
    n = validarDimension(n)
    k = validarOrden(k)
    delta = validarNoNegativo(delta, "delta")
    semilla = validarEntero(semilla, 0, "semilla")

    generador = np.random.default_rng(semilla)

    for intento in range(1, MAX_REINTENTOS_MUESTREO + 1):
        especificacion = _especificacionAleatoria(n, k, generador)
        canonica = formaBloques(especificacion)
        if ordenDe(canonica, k) == k:
            break
        registro.debug("muestrearEliptico: orden distinto de %d en el intento %d, se vuelve a sortear", k, intento)
    else:
        raise ErrorMuestreo(
            f"No se obtuvo orden exacto {k} en {MAX_REINTENTOS_MUESTREO} intentos",
            intentos=MAX_REINTENTOS_MUESTREO,
        )

    B = _conjugadorAleatorio(n, delta, generador)
    A = B @ canonica @ inversa(B)

    if especificacion.fijos == 0:
        δ = delta
    else:
        δ = distanciaConjuntoFijo(A)

    return ElementoEliptico(A, k, δ, especificacion)


def muestrearTestigoIgualdad(n: int, k: int, semilla: int) -> ElementoEliptico:
    """
    Configuración de igualdad de ‖A − I‖ ≥ 2 sin(π/k) en E(n).

    Un único bloque θ = 2π/k (o −I_n si k = 2), conjugado por un elemento
    aleatorio de E(n), de modo que δ = 0 y ‖A − I‖ = 2 sin(π/k).
    """
    n = validarDimension(n)
    k = validarOrden(k)
    semilla = validarEntero(semilla, 0, "semilla")

    if k == 2:
        especificacion = EspecificacionEliptica(n, (), n, 0)
    else:
        especificacion = EspecificacionEliptica(n, (2.0 * math.pi / k,), 0, n - 2)

    generador = np.random.default_rng(semilla)
    Ahat = incrustarRotacion(rotacionAleatoria(n, generador))
    A = Ahat @ formaBloques(especificacion) @ inversa(Ahat)
    return ElementoEliptico(A, k, 0.0, especificacion)


# ============================================================================
# CONJUNTO FIJO
# ============================================================================

def proyeccionConjuntoFijo(A: MatrizLike) -> PuntoHiperbolico:
    """
    Punto de Fix(A) ∩ ℍⁿ más cercano a e₁.

    V = núcleo de A − I (valores singulares < 1e−8 en la SVD). La forma de
    Minkowski restringida a V es no degenerada de signatura (1, dim V − 1)
    cuando V corta el hiperboloide, así que la proyección de Minkowski de
    e₁ sobre V es p = W·c con (WᵀJW)·c = WᵀJ·e₁, y basta normalizarla.

    Raises:
        ErrorInvariante: Si V no corta el hiperboloide (A no es elíptica)
    """
    M = _comoArreglo(A)
    n = M.shape[0] - 1
    J = formaMinkowski(n)

    _, valoresSingulares, Vt = np.linalg.svd(M - np.eye(n + 1))
    W = Vt[valoresSingulares < UMBRAL_ESPACIO_FIJO].T

    if W.shape[1] == 0:
        raise ErrorInvariante("conjunto fijo", "A no fija ningún vector: no es elíptica")

    e1 = np.zeros(n + 1)
    e1[0] = 1.0
    gram = W.T @ J @ W

    try:
        c = np.linalg.solve(gram, W.T @ J @ e1)
    except np.linalg.LinAlgError:
        raise ErrorInvariante("conjunto fijo", "La forma de Minkowski es degenerada sobre Fix(A)")

    p = W @ c
    normaCuadrada = float(p @ J @ p)
    if normaCuadrada >= 0.0:
        raise ErrorInvariante(
            "conjunto fijo",
            f"Fix(A) no corta el hiperboloide (⟨p,p⟩ = {normaCuadrada:.3e}): A no es elíptica"
        )

    p = p / math.sqrt(-normaCuadrada)
    if p[0] < 0:
        p = -p
    return PuntoHiperbolico(VectorMinkowski(p))


def distanciaConjuntoFijo(A: MatrizLike) -> float:
    """
    Distancia hiperbólica de e₁ al conjunto fijo de A en ℍⁿ.

    Raises:
        ErrorInvariante: Si A no tiene puntos fijos en ℍⁿ
    """
    punto = proyeccionConjuntoFijo(A)
    return distancia(puntoBase(punto.dimension), punto)


def normaMenosIdentidad(A: MatrizLike) -> float:
    """‖A − I‖, la cantidad que acotan por abajo todas las constantes de este módulo."""
    M = _comoArreglo(A)
    return normaOperador(M - np.eye(M.shape[0]))


# ============================================================================
# CONSTANTES Y COTAS
# ============================================================================

@ayuda(
    descripcionMatematica="""
    Cota uniforme c_k = 2 sin²(π/k)·e⁻² de ‖A − I‖ para todo elemento
    elíptico A de orden a lo sumo k, sin importar dónde esté su conjunto fijo.
    """,
    supuestos=["k ≥ 2 (con k = 1 la constante degenera)"],
    ejemplos="""
    >>> constanteCk(2)    # 2e⁻²
    0.2706705664732254
    """,
)
@validarArgumentos(k='orden')
def constanteCk(k: int) -> float:
    return 2.0 * math.sin(math.pi / k) ** 2 * math.exp(-2.0)


@validarArgumentos(k='orden', delta='no_negativo')
def cotaInferiorNorma(k: int, delta: float) -> float:
    """
    Cota inferior de ‖A − I‖ para A elíptica de orden ≤ k con conjunto
    fijo a distancia δ de e₁.

    - δ = 0 (A ∈ E(n)): 2 sin(π/k)
    - δ > 0: max{2 sinh²δ·sin²(π/k), 2 sin(π/k)·e^{−2δ}}

    Quien llama decide si un δ diminuto es 0 (umbral UMBRAL_DELTA_CERO).

    Raises:
        ErrorValidacion: Si k < 2 o delta < 0
    """
    s = math.sin(math.pi / k)
    if delta == 0.0:
        return 2.0 * s

    lejana = 2.0 * math.sinh(delta) ** 2 * s * s
    cercana = 2.0 * s * math.exp(-2.0 * delta)
    return max(lejana, cercana)


@lru_cache(maxsize=None)
def deltaCruce(k: int) -> float:
    """
    δ*(k) donde se cruzan las dos ramas de cotaInferiorNorma.

    La rama cercana decrece y la lejana crece, así que el cruce es único;
    en δ = asinh(1/√sin(π/k)) la rama lejana ya supera a la cercana.
    """
    k = validarOrden(k)
    s = math.sin(math.pi / k)

    def diferencia(δ: float) -> float:
        return 2.0 * math.sinh(δ) ** 2 * s * s - 2.0 * s * math.exp(-2.0 * δ)

    return brentq(diferencia, 0.0, math.asinh(1.0 / math.sqrt(s)), xtol=1e-15, rtol=4 * np.finfo(float).eps)


def infimoCotaNorma(k: int) -> float:
    """
    inf_{δ>0} max{2 sinh²δ·sin²(π/k), 2 sin(π/k)·e^{−2δ}}, alcanzado en δ*(k).

    Siempre es ≥ c_k: esa es la cota uniforme de la que sale constanteCk.
    """
    return cotaInferiorNorma(k, deltaCruce(k))


@lru_cache(maxsize=1)
def constanteJorgensen() -> float:
    """
    Constante τ: única raíz positiva de 2τ(1+τ)² = 1.

    Bisección en [0.25, 0.35] hasta error absoluto 1e−14. τ ≈ 0.297156.
    """
    return float(bisect(lambda τ: 2.0 * τ * (1.0 + τ) ** 2 - 1.0, 0.25, 0.35, xtol=1e-14))


def cadenaConstantes(k: int) -> Dict[str, Any]:
    """
    Cadena τ > 0.2971 > 2e⁻² ≥ c_k con sus valores.

    Returns:
        Diccionario con tau, dosEMenosDos, ck, infimo y las comparaciones
    """
    k = validarOrden(k)
    τ = constanteJorgensen()
    dosEMenosDos = 2.0 * math.exp(-2.0)
    ck = constanteCk(k)

    return {
        "k": k,
        "tau": τ,
        "dosEMenosDos": dosEMenosDos,
        "ck": ck,
        "infimo": infimoCotaNorma(k),
        "tauMayorQue02971": τ > 0.2971,
        "02971MayorQueDosEMenosDos": 0.2971 > dosEMenosDos,
        "dosEMenosDosCotaCk": dosEMenosDos >= ck,
    }
