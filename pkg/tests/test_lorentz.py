"""
Pruebas del modelo del hiperboloide y del grupo O⁺(1,n).
"""

import math

import numpy as np
import pytest
from hypothesis import given, seed, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays
from numpy.testing import assert_allclose, assert_array_equal

from orbivol.geometria.lorentz import (
    MatrizLorentz,
    PuntoHiperbolico,
    VectorMinkowski,
    desplazamientoPuntoBase,
    distancia,
    formaMinkowski,
    impulso,
    incrustarRotacion,
    inversa,
    isometriaAleatoria,
    normaOperador,
    productoMinkowski,
    puntoBase,
    rotacionAleatoria,
)
from orbivol.nucleo.excepciones import ErrorDesbordamiento, ErrorInvariante, ErrorValidacion

SEMILLAS = st.integers(min_value=0, max_value=2 ** 32 - 1)
DIMENSIONES = st.integers(min_value=2, max_value=6)


# ========== TIPOS ==========

def test_puntoBaseTieneNormaMenosUno():
    for n in (2, 3, 7):
        e1 = puntoBase(n)
        assert e1.dimension == n
        assert productoMinkowski(e1, e1) == -1.0


def test_vectorRechazaCoordenadasInvalidas():
    with pytest.raises(ErrorValidacion):
        VectorMinkowski([1.0, 0.0])
    with pytest.raises(ErrorValidacion):
        VectorMinkowski([1.0, np.nan, 0.0])


def test_puntoFueraDelHiperboloide():
    with pytest.raises(ErrorInvariante):
        PuntoHiperbolico([0.5, 0.0, 0.0])


def test_puntoEnLaHojaInferior():
    with pytest.raises(ErrorInvariante):
        PuntoHiperbolico([-1.0, 0.0, 0.0])


def test_coordenadasDeSoloLectura():
    e1 = puntoBase(2)
    with pytest.raises(ValueError):
        e1.coordenadas[0] = 2.0


def test_matrizNoCuadrada():
    with pytest.raises(ErrorValidacion):
        MatrizLorentz(np.eye(2))
    with pytest.raises(ErrorValidacion):
        MatrizLorentz(np.ones((3, 4)))


def test_matrizQueNoPreservaLaForma():
    with pytest.raises(ErrorInvariante):
        MatrizLorentz(2.0 * np.eye(3))


def test_matrizQueInvierteLaHoja():
    with pytest.raises(ErrorInvariante):
        MatrizLorentz(-np.eye(3))


def test_orientacion():
    assert impulso(0.7, 3).orientacion == 1
    assert incrustarRotacion(np.diag([-1.0, 1.0])).orientacion == -1


# ========== DISTANCIA ==========

def test_distanciaAlMismoPunto():
    assert distancia(puntoBase(3), puntoBase(3)) == 0.0


@pytest.mark.parametrize("δ", [0.0, 1e-3, 0.5, 2.0, 10.0])
def test_distanciaDelImpulso(δ):
    e1 = puntoBase(4)
    assert distancia(e1, impulso(δ, 4) @ e1) == pytest.approx(δ, rel=1e-12, abs=1e-7)


def test_distanciaDimensionesDistintas():
    with pytest.raises(ErrorValidacion):
        distancia(puntoBase(2), puntoBase(3))


@settings(max_examples=50, deadline=None)
@seed(1)
@given(n=DIMENSIONES, semillaA=SEMILLAS, semillaX=SEMILLAS, semillaY=SEMILLAS)
def test_lasIsometriasPreservanLaDistancia(n, semillaA, semillaX, semillaY):
    e1 = puntoBase(n)
    x = isometriaAleatoria(n, 2.0, semillaX) @ e1
    y = isometriaAleatoria(n, 2.0, semillaY) @ e1
    A = isometriaAleatoria(n, 2.0, semillaA)

    assert productoMinkowski(A @ x, A @ y) == pytest.approx(productoMinkowski(x, y), rel=1e-10)
    # arccosh amplifica el redondeo cuando x ≈ y
    assert distancia(A @ x, A @ y) == pytest.approx(distancia(x, y), abs=1e-5)
    assert distancia(x, y) == distancia(y, x)


def test_desplazamientoPuntoBase():
    assert desplazamientoPuntoBase(impulso(1.3, 2)) == pytest.approx(math.cosh(1.3) - 1.0, rel=1e-14)


# ========== NORMA DE OPERADOR ==========

@pytest.mark.parametrize("n", [2, 3, 5])
@pytest.mark.parametrize("δ", [0.1, 0.5, 1.0, 2.0, 5.0])
def test_normaDelImpulsoEsExponencial(δ, n):
    assert normaOperador(impulso(δ, n)) == pytest.approx(math.exp(δ), rel=1e-9)


def test_normaDeLaIdentidadYDeLaNula():
    assert normaOperador(np.eye(4)) == pytest.approx(1.0, rel=1e-12)
    assert normaOperador(np.zeros((3, 3))) == 0.0


def test_normaDeMatrizDeRangoUno():
    # (1, …, 1) está en el núcleo de AᵀA; la dirección dominante es (1, −1)
    A = np.array([[1.0, -1.0], [1.0, -1.0]])
    assert normaOperador(A) == pytest.approx(2.0, rel=1e-12)


def _conAutovectorUnos(autovalores):
    """Matriz simétrica Q·diag(√λ)·Qᵀ cuya primera dirección propia es (1, …, 1)/√m."""
    m = len(autovalores)
    base = np.eye(m)
    base[:, 0] = 1.0
    Q, _ = np.linalg.qr(base)
    return Q @ np.diag(np.sqrt(autovalores)) @ Q.T


def test_normaConUnosEnDireccionNoDominante():
    # AᵀA tiene a (1, 1, 1) como vector propio de valor 1, pero λ₁ = 1.01
    A = _conAutovectorUnos([1.0, 1.01, 0.5])
    assert normaOperador(A) == pytest.approx(math.sqrt(1.01), rel=1e-9)
    assert normaOperador(A) == pytest.approx(float(np.linalg.norm(A, 2)), rel=1e-9)


@pytest.mark.parametrize("separacion", [1e-3, 1e-6, 1e-9])
def test_normaConValoresSingularesCasiIguales(separacion):
    A = _conAutovectorUnos([1.0, 1.0 + separacion, 0.25, 1.0 - separacion])
    assert normaOperador(A) == pytest.approx(math.sqrt(1.0 + separacion), rel=1e-9)


def _maximoMuestreado(A, generador, muestras=100_000):
    """max ‖Av‖ sobre vectores unitarios uniformes en la esfera."""
    M = np.asarray(A.entradas if isinstance(A, MatrizLorentz) else A, dtype=float)
    V = generador.standard_normal((M.shape[1], muestras))
    V /= np.linalg.norm(V, axis=0)
    return float(np.max(np.linalg.norm(M @ V, axis=0)))


def _matricesDePrueba():
    generador = np.random.default_rng(2024)
    return [
        _conAutovectorUnos([1.0, 1.01, 0.5]),
        impulso(1.5, 2),
        impulso(0.3, 3),
        isometriaAleatoria(2, 2.0, 11),
        isometriaAleatoria(3, 1.0, 12),
        generador.standard_normal((3, 3)),
        generador.standard_normal((4, 4)),
        generador.uniform(-1.0, 1.0, (4, 4)),
    ]


def test_normaAcotaElMaximoMuestreado(generador):
    matrices = _matricesDePrueba() + [
        isometriaAleatoria(n, 2.0, 100 + n) for n in range(4, 8)
    ] + [impulso(3.0, 7)]

    for A in matrices:
        assert normaOperador(A) >= _maximoMuestreado(A, generador) * (1.0 - 1e-9)


def test_normaCercaDelMaximoMuestreado(generador):
    # En dimensión ≤ 4 el muestreo uniforme se acerca a la dirección dominante
    for A in _matricesDePrueba():
        muestreado = _maximoMuestreado(A, generador)
        assert muestreado <= normaOperador(A) * (1.0 + 1e-9)
        assert muestreado >= 0.99 * normaOperador(A)


def test_normaRechazaEntradasNoFinitas():
    with pytest.raises(ErrorValidacion):
        normaOperador(np.array([[1.0, np.inf], [0.0, 1.0]]))


@settings(max_examples=100, deadline=None)
@seed(2)
@given(
    A=arrays(
        np.float64,
        (4, 5),
        elements=st.floats(min_value=-10.0, max_value=10.0, allow_subnormal=False),
    )
)
def test_normaCoincideConLaSVD(A):
    esperado = float(np.linalg.norm(A, 2))
    assert normaOperador(A) == pytest.approx(esperado, rel=1e-9, abs=1e-12)


@settings(max_examples=50, deadline=None)
@seed(3)
@given(n=DIMENSIONES, semillaA=SEMILLAS, semillaB=SEMILLAS)
def test_normaSubmultiplicativa(n, semillaA, semillaB):
    A = isometriaAleatoria(n, 3.0, semillaA)
    B = isometriaAleatoria(n, 3.0, semillaB)
    assert normaOperador(A @ B) <= normaOperador(A) * normaOperador(B) * (1.0 + 1e-9)


@settings(max_examples=50, deadline=None)
@seed(4)
@given(n=DIMENSIONES, semilla=SEMILLAS)
def test_normaDeLaInversa(n, semilla):
    B = isometriaAleatoria(n, 4.0, semilla)
    assert normaOperador(inversa(B)) == pytest.approx(normaOperador(B), rel=1e-9)


# ========== ISOMETRÍAS BÁSICAS ==========

def test_impulsoNuloEsLaIdentidad():
    assert_array_equal(impulso(0.0, 3).entradas, np.eye(4))


def test_impulsoMueveElPuntoBase():
    δ = 1.7
    imagen = impulso(δ, 3) @ puntoBase(3)
    assert_allclose(imagen.coordenadas, [math.cosh(δ), math.sinh(δ), 0.0, 0.0], rtol=1e-15)


@settings(max_examples=50, deadline=None)
@seed(5)
@given(
    a=st.floats(min_value=-1.5, max_value=1.5),
    b=st.floats(min_value=-1.5, max_value=1.5),
)
def test_impulsosFormanUnSubgrupo(a, b):
    producto = impulso(a, 2) @ impulso(b, 2)
    assert_allclose(producto.entradas, impulso(a + b, 2).entradas, atol=1e-12)


def test_impulsoDesborda():
    with pytest.raises(ErrorDesbordamiento):
        impulso(701.0, 2)
    with pytest.raises(ErrorDesbordamiento):
        impulso(-701.0, 2)


def test_incrustarIdentidad():
    assert_array_equal(incrustarRotacion(np.eye(3)).entradas, np.eye(4))


def test_incrustarRotacionFijaElPuntoBase(generador):
    R = incrustarRotacion(rotacionAleatoria(4, generador))
    assert_allclose((R @ puntoBase(4)).coordenadas, puntoBase(4).coordenadas, atol=1e-15)
    assert_allclose(inversa(R).entradas, R.entradas.T, atol=1e-15)


def test_incrustarRotacionNoOrtogonal():
    with pytest.raises(ErrorValidacion):
        incrustarRotacion(np.array([[1.0, 0.1], [0.0, 1.0]]))


def test_rotacionAleatoriaEsOrtogonal(generador):
    for n in (2, 3, 6):
        Q = rotacionAleatoria(n, generador)
        assert_allclose(Q.T @ Q, np.eye(n), atol=1e-12)


def test_inversaDelImpulso():
    assert_allclose(inversa(impulso(0.8, 3)).entradas, impulso(-0.8, 3).entradas, atol=1e-15)
    assert_array_equal(inversa(np.eye(3)).entradas, np.eye(3))


@settings(max_examples=50, deadline=None)
@seed(6)
@given(n=DIMENSIONES, semilla=SEMILLAS)
def test_productoPorLaInversa(n, semilla):
    A = isometriaAleatoria(n, 3.0, semilla)
    assert_allclose((A @ inversa(A)).entradas, np.eye(n + 1), atol=1e-9)


# ========== GENERADORES ==========

def test_isometriaAleatoriaDeterminista():
    A = isometriaAleatoria(3, 2.0, 99)
    B = isometriaAleatoria(3, 2.0, 99)
    assert_array_equal(A.entradas, B.entradas)


@settings(max_examples=100, deadline=None)
@seed(7)
@given(n=DIMENSIONES, traslacion=st.floats(min_value=0.0, max_value=3.0), semilla=SEMILLAS)
def test_isometriaAleatoriaRespetaLosInvariantes(n, traslacion, semilla):
    A = isometriaAleatoria(n, traslacion, semilla)
    J = formaMinkowski(n)
    M = A.entradas

    assert np.max(np.abs(M.T @ J @ M - J)) <= 1e-9
    assert M[0, 0] >= 1.0 - 1e-12
    assert distancia(puntoBase(n), A @ puntoBase(n)) <= traslacion + 1e-7


def test_isometriaAleatoriaParametrosInvalidos():
    with pytest.raises(ErrorValidacion):
        isometriaAleatoria(1, 1.0, 0)
    with pytest.raises(ErrorValidacion):
        isometriaAleatoria(2, -1.0, 0)
    with pytest.raises(ErrorValidacion):
        isometriaAleatoria(2, 1.0, -3)
