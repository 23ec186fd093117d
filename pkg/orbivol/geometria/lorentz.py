"""
Módulo de Lorentz - Modelo del hiperboloide y grupo O⁺(1,n).

Este módulo contiene el álgebra lineal de punto flotante sobre la que se
construye todo lo demás:
- VectorMinkowski, PuntoHiperbolico, MatrizLorentz: tipos inmutables
- productoMinkowski(), distancia(): la forma de signatura (1,n) y la métrica
- normaOperador(): mayor valor singular por iteración de potencias
- impulso(), incrustarRotacion(), inversa(): isometrías básicas
- rotacionAleatoria(), isometriaAleatoria(): generadores con semilla

Convención: J = diag(−1, 1, …, 1), ⟨x,y⟩ = −x₁y₁ + Σ xᵢyᵢ y por lo tanto
cosh d(x,y) = −⟨x,y⟩ sobre la hoja superior ⟨x,x⟩ = −1, x₁ > 0.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

import numpy as np

from ..nucleo.configuracion import (
    LIMITE_IMPULSO,
    MARGEN_ARCCOSH,
    MAX_ITERACIONES_NORMA,
    MIN_ELEVACIONES_NORMA,
    TOLERANCIA_DETERMINANTE,
    TOLERANCIA_ESTRUCTURAL,
    TOLERANCIA_VALOR_PROPIO,
)
from ..nucleo.excepciones import (
    ErrorDesbordamiento,
    ErrorInvariante,
    ErrorNumerico,
    ErrorValidacion,
)
from ..utilidades.decoradores import ayuda, explicacion
from ..utilidades.validadores import validarDimension, validarEntero, validarFinito, validarNoNegativo

registro = logging.getLogger(__name__)


def _soloLectura(arreglo: np.ndarray) -> np.ndarray:
    arreglo.setflags(write=False)
    return arreglo


@lru_cache(maxsize=None)
def formaMinkowski(n: int) -> np.ndarray:
    """
    Matriz J = diag(−1, 1, …, 1) de tamaño (n+1)×(n+1), de solo lectura.
    """
    n = validarDimension(n)
    diagonal = np.ones(n + 1)
    diagonal[0] = -1.0
    return _soloLectura(np.diag(diagonal))


# ============================================================================
# TIPOS
# ============================================================================

@dataclass(frozen=True, eq=False)
class VectorMinkowski:
    """
    Vector de ℝ^{n+1} con la coordenada 1 temporal.

    Args:
        coordenadas: n+1 números reales finitos, n ≥ 2

    Raises:
        ErrorValidacion: Si la longitud es menor que 3 o hay entradas no finitas
    """
    coordenadas: np.ndarray

    def __post_init__(self) -> None:
        try:
            coords = np.array(self.coordenadas, dtype=float)
        except (TypeError, ValueError):
            raise ErrorValidacion("coordenadas", "Las coordenadas deben ser números reales")

        if coords.ndim != 1 or coords.size < 3:
            raise ErrorValidacion(
                "coordenadas",
                f"Se esperaban n+1 ≥ 3 coordenadas, recibido: forma {coords.shape}"
            )
        if not np.all(np.isfinite(coords)):
            raise ErrorValidacion("coordenadas", "Las coordenadas deben ser finitas")

        object.__setattr__(self, "coordenadas", _soloLectura(coords))

    @property
    def dimension(self) -> int:
        """Dimensión n del espacio hiperbólico (el vector tiene n+1 coordenadas)."""
        return self.coordenadas.size - 1

    def __repr__(self) -> str:
        return f"VectorMinkowski({np.array2string(self.coordenadas, precision=6)})"


@ayuda(
    descripcionMatematica="""
    Punto del espacio hiperbólico ℍⁿ en el modelo del hiperboloide:
    la hoja superior de −x₁² + x₂² + ⋯ + x_{n+1}² = −1.

    La distancia entre dos puntos cumple cosh d(x,y) = −⟨x,y⟩.
    """,
    supuestos=[
        "⟨x,x⟩ = −1 con tolerancia 1e−9 (relativa a x₁² para puntos lejanos)",
        "x₁ ≥ 1 (hoja superior)",
    ],
)


@dataclass(frozen=True, eq=False)
class PuntoHiperbolico:
    """
    Punto sobre la hoja superior del hiperboloide.

    Args:
        vector: VectorMinkowski (o coordenadas) con ⟨x,x⟩ = −1 y x₁ ≥ 1

    Raises:
        ErrorInvariante: Si el vector no está sobre la hoja superior

    Ejemplo:
        >>> p = PuntoHiperbolico([np.cosh(1), np.sinh(1), 0.0])
        >>> p.dimension
        2
    """
    vector: VectorMinkowski

    def __post_init__(self) -> None:
        vector = self.vector
        if not isinstance(vector, VectorMinkowski):
            vector = VectorMinkowski(vector)
            object.__setattr__(self, "vector", vector)

        x = vector.coordenadas
        escala = max(1.0, x[0] * x[0])
        residuo = abs(productoMinkowski(vector, vector) + 1.0)

        if residuo > TOLERANCIA_ESTRUCTURAL * escala:
            raise ErrorInvariante(
                "hiperboloide",
                f"⟨x,x⟩ debe ser −1, error: {residuo:.3e}"
            )
        if x[0] < 1.0 - TOLERANCIA_ESTRUCTURAL:
            raise ErrorInvariante(
                "hoja superior",
                f"La primera coordenada debe ser ≥ 1, recibido: {x[0]}"
            )

    @property
    def coordenadas(self) -> np.ndarray:
        return self.vector.coordenadas

    @property
    def dimension(self) -> int:
        return self.vector.dimension

    def __repr__(self) -> str:
        return f"PuntoHiperbolico({np.array2string(self.coordenadas, precision=6)})"


@ayuda(
    descripcionMatematica="""
    Isometría de ℍⁿ representada por una matriz del grupo O⁺(1,n):
    preserva la forma de Minkowski (AᵀJA = J) y la hoja superior (a₁₁ ≥ 1).

    La entrada a₁₁ es cosh d(e₁, Ae₁): mide cuánto mueve A al punto base.
    """,
    supuestos=[
        "AᵀJA = J con error máximo por entrada 1e−9 (relativo a max|aᵢⱼ|²)",
        "a₁₁ ≥ 1",
        "det(A) = ±1 (la orientación se registra, no se restringe)",
    ],
    ejemplos="""
    >>> B = impulso(1.0, 3)
    >>> B.dimension
    3
    >>> (B @ inversa(B)).entradas   # identidad
    """,
)


@dataclass(frozen=True, eq=False)
class MatrizLorentz:
    """
    Matriz (n+1)×(n+1) de O⁺(1,n), inmutable.

    Args:
        entradas: Matriz cuadrada de tamaño al menos 3×3

    Raises:
        ErrorValidacion: Si la forma no es cuadrada o hay entradas no finitas
        ErrorInvariante: Si la matriz no preserva la forma o la hoja superior
    """
    entradas: np.ndarray

    def __post_init__(self) -> None:
        A = np.array(self.entradas, dtype=float)

        if A.ndim != 2 or A.shape[0] != A.shape[1] or A.shape[0] < 3:
            raise ErrorValidacion(
                "entradas",
                f"Se esperaba una matriz cuadrada de tamaño ≥ 3, recibido: forma {A.shape}"
            )
        if not np.all(np.isfinite(A)):
            raise ErrorValidacion("entradas", "Las entradas deben ser finitas")

        n = A.shape[0] - 1
        J = formaMinkowski(n)
        # Los errores de redondeo de AᵀJA crecen con el cuadrado de las entradas
        escala = max(1.0, float(np.max(np.abs(A)))) ** 2

        error = float(np.max(np.abs(A.T @ J @ A - J)))
        if error > TOLERANCIA_ESTRUCTURAL * escala:
            raise ErrorInvariante("AᵀJA = J", f"La matriz no preserva la forma de Minkowski, error: {error:.3e}")

        if A[0, 0] < 1.0 - TOLERANCIA_ESTRUCTURAL * escala:
            raise ErrorInvariante("a₁₁ ≥ 1", f"La matriz invierte la hoja del hiperboloide: a₁₁ = {A[0, 0]}")

        determinante = np.linalg.det(A)
        if abs(abs(determinante) - 1.0) > TOLERANCIA_DETERMINANTE * escala:
            raise ErrorInvariante("det = ±1", f"Determinante fuera de ±1: {determinante}")

        object.__setattr__(self, "entradas", _soloLectura(A))

    @property
    def dimension(self) -> int:
        """Dimensión n del espacio hiperbólico."""
        return self.entradas.shape[0] - 1

    @property
    def orientacion(self) -> int:
        """+1 si A preserva la orientación, −1 si la invierte."""
        return 1 if np.linalg.det(self.entradas) > 0 else -1

    def aplicar(self, punto: PuntoHiperbolico) -> PuntoHiperbolico:
        """Imagen A·x de un punto del hiperboloide."""
        punto = _comoPunto(punto)
        _mismaDimension(self.dimension, punto.dimension)
        return PuntoHiperbolico(VectorMinkowski(self.entradas @ punto.coordenadas))

    def __matmul__(self, otro):
        if isinstance(otro, MatrizLorentz):
            _mismaDimension(self.dimension, otro.dimension)
            return MatrizLorentz(self.entradas @ otro.entradas)
        if isinstance(otro, PuntoHiperbolico):
            return self.aplicar(otro)
        return self.entradas @ np.asarray(otro, dtype=float)

    def __repr__(self) -> str:
        return f"MatrizLorentz(n={self.dimension}, a11={self.entradas[0, 0]:.6g})"


MatrizLike = Union[MatrizLorentz, np.ndarray]
VectorLike = Union[VectorMinkowski, PuntoHiperbolico, np.ndarray]


def _comoArreglo(A: MatrizLike) -> np.ndarray:
    if isinstance(A, MatrizLorentz):
        return A.entradas
    return np.asarray(A, dtype=float)


def _comoVector(x: VectorLike) -> VectorMinkowski:
    if isinstance(x, PuntoHiperbolico):
        return x.vector
    if isinstance(x, VectorMinkowski):
        return x
    return VectorMinkowski(x)


def _comoPunto(x: VectorLike) -> PuntoHiperbolico:
    if isinstance(x, PuntoHiperbolico):
        return x
    return PuntoHiperbolico(_comoVector(x))


def _mismaDimension(n1: int, n2: int) -> None:
    if n1 != n2:
        raise ErrorValidacion("dimension", f"Dimensiones distintas: {n1} y {n2}")


# ============================================================================
# FORMA Y DISTANCIA
# ============================================================================

def puntoBase(n: int) -> PuntoHiperbolico:
    """
    El punto base e₁ = (1, 0, …, 0) de ℍⁿ.

    Args:
        n: Dimensión (≥ 2)

    Returns:
        PuntoHiperbolico e₁
    """
    n = validarDimension(n)
    e1 = np.zeros(n + 1)
    e1[0] = 1.0
    return PuntoHiperbolico(VectorMinkowski(e1))


def productoMinkowski(x: VectorLike, y: VectorLike) -> float:
    """
    Forma bilineal simétrica ⟨x,y⟩ = −x₁y₁ + Σ_{i≥2} xᵢyᵢ.

    Args:
        x, y: Vectores de la misma dimensión

    Returns:
        Valor de la forma

    Raises:
        ErrorValidacion: Si las dimensiones no coinciden

    Ejemplo:
        >>> e1 = puntoBase(2)
        >>> productoMinkowski(e1, e1)
        -1.0
    """
    u = _comoVector(x).coordenadas
    v = _comoVector(y).coordenadas
    _mismaDimension(u.size - 1, v.size - 1)
    return float(-u[0] * v[0] + u[1:] @ v[1:])


@explicacion("Distancia hiperbólica en el modelo del hiperboloide: cosh d(x,y) = −⟨x,y⟩")
def distancia(x: VectorLike, y: VectorLike) -> float:
    """
    Distancia hiperbólica entre dos puntos del hiperboloide.

    El argumento de arccosh se recorta a [1, ∞) para absorber el redondeo,
    pero solo si −⟨x,y⟩ ≥ 1 − 1e−6; por debajo de ese margen los puntos no
    pueden estar en la misma hoja y se lanza un error.

    Args:
        x, y: Puntos del hiperboloide

    Returns:
        d(x,y) ≥ 0

    Raises:
        ErrorInvariante: Si −⟨x,y⟩ < 1 − 1e−6
    """
    p = _comoPunto(x)
    q = _comoPunto(y)
    argumento = -productoMinkowski(p, q)

    if argumento < 1.0 - MARGEN_ARCCOSH:
        raise ErrorInvariante(
            "cosh d ≥ 1",
            f"−⟨x,y⟩ = {argumento} < 1: los puntos no están en la hoja superior"
        )

    return float(np.arccosh(max(argumento, 1.0)))


def desplazamientoPuntoBase(A: MatrizLorentz) -> float:
    """
    cosh d(e₁, Ae₁) − 1, que es simplemente a₁₁ − 1.

    Para un elemento elíptico cuyo conjunto fijo está a distancia δ de e₁ y
    que gira un ángulo θ en la dirección normal, vale 2 sinh²δ sin²(θ/2).
    """
    return float(_comoArreglo(A)[0, 0] - 1.0)


# ============================================================================
# NORMA DE OPERADOR
# ============================================================================

@explicacion("‖A‖ = √(radio espectral de AᵀA), el mayor valor singular de A")
def normaOperador(A: MatrizLike) -> float:
    """
    Norma de operador (euclídea) de una matriz real.

    Iteración de potencias sobre la matriz simétrica semidefinida G = AᵀA,
    acelerada elevando al cuadrado: en el paso j se tiene P ∝ G^{2^j}
    normalizada en Frobenius. El valor propio dominante se estima con el
    cociente de trazas tr(PG)/tr(P) = Σλᵢ^{p+1}/Σλᵢ^p, una media de los
    valores propios que crece con p hacia λ₁ y no depende de ningún vector
    inicial. No se acepta la convergencia antes de MIN_ELEVACIONES_NORMA
    elevaciones: con valores propios casi iguales el cociente avanza muy
    despacio en los primeros pasos.

    Args:
        A: MatrizLorentz o matriz real de dos dimensiones

    Returns:
        El mayor valor singular de A (0 para la matriz nula)

    Raises:
        ErrorValidacion: Si A no es bidimensional o tiene entradas no finitas
        ErrorNumerico: Si no converge en 10⁴ iteraciones (lleva el último iterado)

    Ejemplo:
        >>> normaOperador(impulso(1.0, 2))   # e¹
        2.718281828459045
    """
    M = _comoArreglo(A)
    if M.ndim != 2 or M.size == 0:
        raise ErrorValidacion("A", f"Se esperaba una matriz, recibido: forma {M.shape}")
    if not np.all(np.isfinite(M)):
        raise ErrorValidacion("A", "Las entradas deben ser finitas")

    escala = float(np.max(np.abs(M)))
    if escala == 0.0:
        return 0.0

    B = M / escala
    G = B.T @ B
    P = G / np.linalg.norm(G)
    valorPrevio = 0.0
    valor = 0.0

    for iteracion in range(1, MAX_ITERACIONES_NORMA + 1):
        # P es semidefinida con ‖P‖_F = 1, así que tr(P) ≥ 1
        valor = float(np.sum(P * G) / np.trace(P))

        if iteracion > MIN_ELEVACIONES_NORMA and abs(valor - valorPrevio) <= TOLERANCIA_VALOR_PROPIO * valor:
            return escala * float(np.sqrt(valor))

        valorPrevio = valor
        P = P @ P
        P /= np.linalg.norm(P)

    registro.warning("normaOperador: se agotaron %d iteraciones (último valor %.17g)", MAX_ITERACIONES_NORMA, valor)
    raise ErrorNumerico(
        f"normaOperador no convergió en {MAX_ITERACIONES_NORMA} iteraciones",
        ultimoIterado=escala * float(np.sqrt(valor)),
    )


# ============================================================================
# ISOMETRÍAS BÁSICAS
# ============================================================================

@explicacion("Traslación hiperbólica de longitud δ a lo largo de la geodésica por e₁ en la dirección e₂")
def impulso(δ: float, n: int) -> MatrizLorentz:
    """
    Matriz de impulso (boost) T(δ).

    Actúa en el bloque (e₁, e₂) como [[cosh δ, sinh δ], [sinh δ, cosh δ]] y
    como la identidad en el resto, de modo que T(δ)·e₁ = (cosh δ, sinh δ, 0, …).

    Args:
        δ: Longitud de la traslación (puede ser negativa)
        n: Dimensión (≥ 2)

    Returns:
        MatrizLorentz del impulso

    Raises:
        ErrorDesbordamiento: Si |δ| > 700 (cosh δ excede los dobles)
    """
    δ = validarFinito(δ, "δ")
    n = validarDimension(n)

    if abs(δ) > LIMITE_IMPULSO:
        raise ErrorDesbordamiento(f"|δ| = {abs(δ)} > {LIMITE_IMPULSO}: cosh δ desborda")

    T = np.eye(n + 1)
    T[0, 0] = T[1, 1] = np.cosh(δ)
    T[0, 1] = T[1, 0] = np.sinh(δ)
    return MatrizLorentz(T)


def incrustarRotacion(Q: np.ndarray) -> MatrizLorentz:
    """
    Incrusta Q ∈ O(n) en el estabilizador E(n) de e₁ como diag(1, Q).

    Args:
        Q: Matriz n×n con QᵀQ = I (error máximo 1e−9), n ≥ 2

    Returns:
        MatrizLorentz que fija e₁ exactamente

    Raises:
        ErrorValidacion: Si Q no es cuadrada u ortogonal
    """
    Q = np.asarray(Q, dtype=float)
    if Q.ndim != 2 or Q.shape[0] != Q.shape[1] or Q.shape[0] < 2:
        raise ErrorValidacion("Q", f"Se esperaba una matriz cuadrada de tamaño ≥ 2, recibido: forma {Q.shape}")
    if not np.all(np.isfinite(Q)):
        raise ErrorValidacion("Q", "Las entradas deben ser finitas")

    n = Q.shape[0]
    error = float(np.max(np.abs(Q.T @ Q - np.eye(n))))
    if error > TOLERANCIA_ESTRUCTURAL:
        raise ErrorValidacion("Q", f"Q no es ortogonal: max|QᵀQ − I| = {error:.3e}")

    A = np.eye(n + 1)
    A[1:, 1:] = Q
    return MatrizLorentz(A)


def inversa(A: MatrizLike) -> MatrizLorentz:
    """
    Inversa de una matriz de Lorentz en forma cerrada: A⁻¹ = J Aᵀ J.

    Raises:
        ErrorInvariante: Si A no pertenece a O⁺(1,n)
    """
    if not isinstance(A, MatrizLorentz):
        A = MatrizLorentz(A)
    J = formaMinkowski(A.dimension)
    return MatrizLorentz(J @ A.entradas.T @ J)


def reortogonalizar(P: np.ndarray) -> np.ndarray:
    """
    Un paso de Newton hacia O(1,n): P ← P(3I − J PᵀJ P)/2.

    Corrige la deriva acumulada al multiplicar muchas matrices de Lorentz;
    converge cuadráticamente si P ya está cerca del grupo.
    """
    P = np.asarray(P, dtype=float)
    J = formaMinkowski(P.shape[0] - 1)
    identidad = np.eye(P.shape[0])
    return P @ (3.0 * identidad - J @ P.T @ J @ P) / 2.0


# ============================================================================
# GENERADORES ALEATORIOS
# ============================================================================

def rotacionAleatoria(n: int, generador: np.random.Generator) -> np.ndarray:
    """
    Muestra Q ∈ O(n) con distribución de Haar.

    Ortonormaliza (QR) una matriz de normales estándar independientes y
    corrige los signos de la diagonal de R.

    Args:
        n: Tamaño de la matriz (≥ 2)
        generador: np.random.Generator ya sembrado

    Returns:
        Matriz ortogonal n×n
    """
    n = validarEntero(n, 2, "n")
    Z = generador.standard_normal((n, n))
    Q, R = np.linalg.qr(Z)
    signos = np.sign(np.diag(R))
    signos[signos == 0] = 1.0
    return Q * signos


def isometriaAleatoria(n: int, traslacionMaxima: float, semilla: int) -> MatrizLorentz:
    """
    Isometría aleatoria A = R(Q₁)·T(s)·R(Q₂).

    Q₁ y Q₂ son rotaciones de Haar y s es uniforme en [0, traslacionMaxima],
    así que d(e₁, A·e₁) = s ≤ traslacionMaxima.

    Args:
        n: Dimensión (≥ 2)
        traslacionMaxima: Cota de la traslación (≥ 0)
        semilla: Semilla entera (≥ 0); la misma semilla da la misma matriz

    Returns:
        MatrizLorentz aleatoria
    """
    n = validarDimension(n)
    traslacionMaxima = validarNoNegativo(traslacionMaxima, "traslacionMaxima")
    semilla = validarEntero(semilla, 0, "semilla")

    generador = np.random.default_rng(semilla)
    Q1 = rotacionAleatoria(n, generador)
    Q2 = rotacionAleatoria(n, generador)
    s = generador.uniform(0.0, traslacionMaxima)

    return incrustarRotacion(Q1) @ impulso(s, n) @ incrustarRotacion(Q2)
