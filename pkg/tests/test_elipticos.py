"""
Pruebas de los elementos elípticos y de las constantes c_k, δ*(k) y τ.
"""

import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, seed, settings
from hypothesis import strategies as st
from numpy.testing import assert_allclose, assert_array_equal
from scipy.linalg import null_space
from scipy.optimize import minimize

from orbivol.geometria.elipticos import (
    ElementoEliptico,
    EspecificacionEliptica,
    cadenaConstantes,
    constanteCk,
    constanteJorgensen,
    cotaInferiorNorma,
    deltaCruce,
    distanciaConjuntoFijo,
    formaBloques,
    infimoCotaNorma,
    muestrearEliptico,
    muestrearTestigoIgualdad,
    normaMenosIdentidad,
    ordenDe,
    proyeccionConjuntoFijo,
)
from orbivol.geometria.lorentz import (
    desplazamientoPuntoBase,
    formaMinkowski,
    impulso,
    incrustarRotacion,
    inversa,
    puntoBase,
    rotacionAleatoria,
)
from orbivol.nucleo.excepciones import ErrorInvariante, ErrorValidacion


# ========== FORMA CANÓNICA ==========

def test_especificacionValida():
    esp = EspecificacionEliptica(5, angulos=(1.0, 2.0), reflexiones=1)
    assert esp.fijos == 0
    assert esp.angulos == (1.0, 2.0)


@pytest.mark.parametrize("angulo", [0.0, math.pi, -1.0, 4.0])
def test_especificacionAnguloFueraDeRango(angulo):
    with pytest.raises(ErrorValidacion):
        EspecificacionEliptica(2, angulos=(angulo,))


def test_especificacionCuentasIncorrectas():
    with pytest.raises(ErrorValidacion):
        EspecificacionEliptica(4, angulos=(1.0,), reflexiones=1)


def test_formaBloquesCuartoDeVuelta():
    A = formaBloques(EspecificacionEliptica(2, angulos=(math.pi / 2,)))
    esperado = np.array([[1.0, 0.0, 0.0], [0.0, 0.0, -1.0], [0.0, 1.0, 0.0]])
    assert_allclose(A.entradas, esperado, atol=1e-16)


def test_formaBloquesReflexiones():
    A = formaBloques(EspecificacionEliptica(3, reflexiones=2, fijos=1))
    assert_array_equal(np.diag(A.entradas), [1.0, -1.0, -1.0, 1.0])


def test_formaBloquesTipoIncorrecto():
    with pytest.raises(ErrorValidacion):
        formaBloques((2, (1.0,)))


# ========== ORDEN ==========

def test_ordenDeUnaRotacion():
    A = formaBloques(EspecificacionEliptica(2, angulos=(2.0 * math.pi / 3,)))
    assert ordenDe(A, 3) == 3
    assert ordenDe(A, 2) is None


def test_ordenDeLaIdentidad():
    assert ordenDe(np.eye(4), 5) == 1


def test_ordenDeUnaTraslacion():
    assert ordenDe(impulso(1.0, 2), 50) is None


def test_ordenDeUnaTraslacionLarga():
    # Las potencias desbordan antes de llegar a kMax
    assert ordenDe(impulso(300.0, 2), 20) is None


def test_ordenCombinado():
    # Bloques de orden 2 y 3 dan orden 6
    esp = EspecificacionEliptica(3, angulos=(2.0 * math.pi / 3,), reflexiones=1)
    assert ordenDe(formaBloques(esp), 12) == 6


# ========== MUESTREO ==========

@pytest.mark.parametrize("n", [2, 3, 4, 6])
@pytest.mark.parametrize("k", [2, 3, 4, 5, 6, 7, 12])
def test_muestrearElipticoTieneOrdenExacto(n, k):
    for semilla in range(5):
        elemento = muestrearEliptico(n, k, 0.5 + 0.3 * semilla, semilla)
        assert isinstance(elemento, ElementoEliptico)
        assert elemento.orden == k
        assert ordenDe(elemento.matriz, k) == k


def test_muestrearElipticoDeterminista():
    a = muestrearEliptico(4, 5, 1.0, 77)
    b = muestrearEliptico(4, 5, 1.0, 77)
    assert_array_equal(a.matriz.entradas, b.matriz.entradas)
    assert a.especificacion == b.especificacion


@settings(max_examples=60, deadline=None)
@seed(11)
@given(
    n=st.integers(min_value=2, max_value=6),
    k=st.sampled_from([2, 3, 5, 7]),
    delta=st.floats(min_value=0.0, max_value=2.0),
    semilla=st.integers(min_value=0, max_value=2 ** 32 - 1),
)
def test_distanciaAlConjuntoFijo(n, k, delta, semilla):
    elemento = muestrearEliptico(n, k, delta, semilla)
    δ = distanciaConjuntoFijo(elemento.matriz)

    if elemento.especificacion.fijos == 0:
        # El único punto fijo es B·e₁, a distancia delta
        assert δ == pytest.approx(delta, abs=1e-6)
    else:
        assert δ <= delta + 1e-6
    assert elemento.delta == pytest.approx(δ, abs=1e-6)


@settings(max_examples=60, deadline=None)
@seed(12)
@given(
    n=st.integers(min_value=2, max_value=6),
    k=st.integers(min_value=2, max_value=12),
    delta=st.floats(min_value=0.0, max_value=3.0),
    semilla=st.integers(min_value=0, max_value=2 ** 32 - 1),
)
def test_normaMenosIdentidadSuperaCk(n, k, delta, semilla):
    elemento = muestrearEliptico(n, k, delta, semilla)
    assert normaMenosIdentidad(elemento.matriz) >= constanteCk(k) * (1.0 - 1e-9)


@pytest.mark.parametrize("n", [2, 3, 5])
@pytest.mark.parametrize("k", [2, 3, 4, 5, 7, 12])
def test_testigoDeIgualdad(n, k):
    elemento = muestrearTestigoIgualdad(n, k, semilla=n * 100 + k)
    assert elemento.delta == 0.0
    assert normaMenosIdentidad(elemento.matriz) == pytest.approx(2.0 * math.sin(math.pi / k), abs=1e-12)


def test_muestrearElipticoParametrosInvalidos():
    with pytest.raises(ErrorValidacion):
        muestrearEliptico(2, 1, 0.5, 0)
    with pytest.raises(ErrorValidacion):
        muestrearEliptico(2, 3, -0.5, 0)


# ========== CONJUNTO FIJO ==========

def test_rotacionRespectoDeUnPuntoLejano():
    δ, θ = 1.2, 2.0 * math.pi / 5
    B = impulso(δ, 2)
    A = B @ formaBloques(EspecificacionEliptica(2, angulos=(θ,))) @ inversa(B)

    punto = proyeccionConjuntoFijo(A)
    assert_allclose(punto.coordenadas, (B @ puntoBase(2)).coordenadas, atol=1e-9)
    assert distanciaConjuntoFijo(A) == pytest.approx(δ, rel=1e-9)
    # Ley del coseno hiperbólica: cosh d(e₁, Ae₁) − 1 = 2 sinh²δ·sin²(θ/2)
    assert desplazamientoPuntoBase(A) == pytest.approx(
        2.0 * math.sinh(δ) ** 2 * math.sin(θ / 2.0) ** 2, rel=1e-12
    )


def test_elementoDeEnFijaElPuntoBase(generador):
    A = incrustarRotacion(rotacionAleatoria(3, generador))
    assert distanciaConjuntoFijo(A) == pytest.approx(0.0, abs=1e-6)


def test_traslacionNoEsEliptica():
    with pytest.raises(ErrorInvariante):
        distanciaConjuntoFijo(impulso(1.0, 2))


def _coshMinimoPorBusqueda(A, semilla, muestras=20_000):
    """
    min x₁ sobre Fix(A) ∩ ℍⁿ por búsqueda directa: muestreo de combinaciones
    de una base del núcleo de A − I y refinamiento con Nelder–Mead.
    """
    M = np.asarray(A.entradas, dtype=float)
    n = M.shape[0] - 1
    W = null_space(M - np.eye(n + 1), rcond=1e-9)
    gram = W.T @ formaMinkowski(n) @ W

    def valor(c):
        q = float(c @ gram @ c)
        if q >= 0.0:
            return math.inf
        return abs(float(W[0] @ c)) / math.sqrt(-q)

    generador = np.random.default_rng(semilla)
    C = generador.standard_normal((muestras, W.shape[1]))
    formas = np.einsum("ij,jk,ik->i", C, gram, C)
    temporales = C[formas < 0.0]
    valores = np.abs(temporales @ W[0]) / np.sqrt(-formas[formas < 0.0])
    inicio = temporales[int(np.argmin(valores))]

    refinado = minimize(valor, inicio, method="Nelder-Mead",
                        options={"xatol": 1e-12, "fatol": 1e-15, "maxiter": 20_000})
    return min(float(np.min(valores)), float(refinado.fun))


def _comprobarContraBusqueda(n, k, delta, semilla):
    elemento = muestrearEliptico(n, k, delta, semilla)
    coshBuscado = _coshMinimoPorBusqueda(elemento.matriz, semilla)
    coshCalculado = math.cosh(distanciaConjuntoFijo(elemento.matriz))

    # Ningún punto fijo está más cerca de e₁ que la proyección
    assert coshBuscado >= coshCalculado * (1.0 - 1e-12)
    assert coshBuscado == pytest.approx(coshCalculado, rel=1e-9)
    assert math.acosh(max(coshBuscado, 1.0)) == pytest.approx(elemento.delta, abs=1e-6)


@pytest.mark.parametrize("semilla", range(40))
def test_distanciaConjuntoFijoContraBusquedaDirecta(semilla):
    generador = np.random.default_rng(semilla)
    n = int(generador.integers(2, 6))
    k = int(generador.choice([2, 3, 4, 5, 6]))
    _comprobarContraBusqueda(n, k, float(generador.uniform(0.0, 2.0)), semilla)


@pytest.mark.lento
def test_distanciaConjuntoFijoContraBusquedaMilCasos():
    generador = np.random.default_rng(2025)
    for semilla in range(1000):
        n = int(generador.integers(2, 6))
        k = int(generador.integers(2, 13))
        _comprobarContraBusqueda(n, k, float(generador.uniform(0.0, 2.0)), semilla)


# ========== NORMA DE A − I ==========

@pytest.mark.parametrize("especificacion, esperado", [
    (EspecificacionEliptica(2, angulos=(math.pi / 2,)), 2.0 * math.sin(math.pi / 4)),
    (EspecificacionEliptica(4, angulos=(0.4, 2.0)), 2.0 * math.sin(1.0)),
    (EspecificacionEliptica(5, angulos=(0.3, 1.1), fijos=1), 2.0 * math.sin(0.55)),
    (EspecificacionEliptica(3, angulos=(2.5,), reflexiones=1), 2.0),
    (EspecificacionEliptica(3, reflexiones=1, fijos=2), 2.0),
])
def test_normaMenosIdentidadDeLaFormaCanonica(especificacion, esperado):
    assert normaMenosIdentidad(formaBloques(especificacion)) == pytest.approx(esperado, rel=1e-12)


@pytest.mark.parametrize("n, k", [(2, 5), (3, 4), (4, 7), (5, 2)])
def test_normaMenosIdentidadInvarianteBajoE(n, k, generador):
    A = muestrearEliptico(n, k, 1.0, 31 * n + k).matriz
    R = incrustarRotacion(rotacionAleatoria(n, generador))
    conjugada = R @ A @ inversa(R)

    assert normaMenosIdentidad(conjugada) == pytest.approx(normaMenosIdentidad(A), rel=1e-9)


# ========== ELEMENTO ELÍPTICO ==========

def test_elementoConOrdenCorrecto():
    canonica = formaBloques(EspecificacionEliptica(2, angulos=(2.0 * math.pi / 5,)))
    elemento = ElementoEliptico(canonica, 5, 0.0)
    assert elemento.orden == 5


@pytest.mark.parametrize("orden", [3, 10])
def test_elementoConOrdenIncorrecto(orden):
    canonica = formaBloques(EspecificacionEliptica(2, angulos=(2.0 * math.pi / 5,)))
    with pytest.raises(ErrorInvariante, match="orden exacto"):
        ElementoEliptico(canonica, orden, 0.0)


def test_elementoHiperbolicoNoTieneOrden():
    with pytest.raises(ErrorInvariante):
        ElementoEliptico(impulso(1.0, 2), 4, 0.0)


def test_elementoConEspecificacionDeOtraDimension():
    especificacion = EspecificacionEliptica(2, reflexiones=2)
    with pytest.raises(ErrorInvariante):
        ElementoEliptico(formaBloques(EspecificacionEliptica(3, reflexiones=3)), 2, 0.0, especificacion)


def test_elementoMuestreadoLejosConservaElOrden():
    elemento = muestrearEliptico(4, 7, 5.0, 3)
    assert ElementoEliptico(elemento.matriz, 7, elemento.delta).orden == 7


# ========== CONSTANTES ==========

def test_ck():
    assert constanteCk(2) == pytest.approx(2.0 * math.exp(-2.0), abs=1e-15)
    assert constanteCk(2) == pytest.approx(0.270670566473, abs=1e-12)
    assert constanteCk(3) == pytest.approx(1.5 * math.exp(-2.0), rel=1e-14)


def test_ckEstrictamenteDecreciente():
    valores = [constanteCk(k) for k in range(2, 101)]
    assert all(a > b for a, b in zip(valores, valores[1:]))


def test_ckOrdenInvalido():
    with pytest.raises(ErrorValidacion):
        constanteCk(1)


def test_cotaInferiorNorma():
    assert cotaInferiorNorma(5, 0.0) == pytest.approx(2.0 * math.sin(math.pi / 5), rel=1e-15)
    assert cotaInferiorNorma(2, 1.0) == pytest.approx(2.0 * math.sinh(1.0) ** 2, rel=1e-15)
    assert cotaInferiorNorma(2, 1.0) == pytest.approx(2.76220, rel=1e-5)
    # Rama cercana: 2 sin(π/k)·e^{−2δ}
    assert cotaInferiorNorma(3, 0.01) == pytest.approx(2.0 * math.sin(math.pi / 3) * math.exp(-0.02), rel=1e-15)


def test_cotaInferiorNormaDeltaNegativo():
    with pytest.raises(ErrorValidacion):
        cotaInferiorNorma(3, -0.1)


@pytest.mark.parametrize("k", [2, 3, 4, 7, 20, 100])
def test_deltaCruceIgualaLasRamas(k):
    s = math.sin(math.pi / k)
    δ = deltaCruce(k)
    lejana = 2.0 * math.sinh(δ) ** 2 * s * s
    cercana = 2.0 * s * math.exp(-2.0 * δ)
    assert lejana == pytest.approx(cercana, rel=1e-12)
    assert infimoCotaNorma(k) == pytest.approx(cercana, rel=1e-12)


def test_infimoSuperaCk():
    for k in range(2, 101):
        assert infimoCotaNorma(k) >= constanteCk(k)


def test_jorgensen():
    τ = constanteJorgensen()
    assert abs(2.0 * τ * (1.0 + τ) ** 2 - 1.0) <= 1e-13
    assert τ > 0.2971

    with mpmath.workdps(30):
        raiz = mpmath.findroot(lambda t: 2 * t * (1 + t) ** 2 - 1, 0.3)
    assert τ == pytest.approx(float(raiz), abs=1e-13)


@pytest.mark.parametrize("k", [2, 3, 5, 12])
def test_cadenaConstantes(k):
    cadena = cadenaConstantes(k)
    assert cadena["k"] == k
    assert cadena["tauMayorQue02971"]
    assert cadena["02971MayorQueDosEMenosDos"]
    assert cadena["dosEMenosDosCotaCk"]
    assert cadena["infimo"] >= cadena["ck"]
