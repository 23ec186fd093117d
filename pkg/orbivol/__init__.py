"""
Orbivol - Cotas explícitas de volumen para orbifolds hiperbólicos.

Biblioteca que calcula la cota inferior 𝒜(n,k) del volumen de un
n-orbifold hiperbólico cuya torsión tiene orden a lo sumo k, las cotas
de tipo Hurwitz que se deducen de ella, y que verifica con ensayos
aleatorios cada desigualdad sobre isometrías de ℍⁿ en la que se apoya.
"""

__version__ = "0.1.0"
__author__ = "Marcos Junior Hernández-Moreno"

import logging

# Imports locales (módulos de Orbivol)
from .cotas import (
    ConsultaCota,
    ResultadoCota,
    areaEsfera,
    calcularCota,
    cotaHurwitz,
    cotaHurwitzOut,
    estaSaturada,
    integralSinhExacta,
    logCocienteHurwitz,
    logConteoEmpaquetamiento,
    logConteoEmpaquetamientoDirecto,
    logKappa,
    logObjetivo,
    logVolumenBola,
    notacionCientifica,
    volumenBola,
)
from .geometria import (
    ElementoEliptico,
    EspecificacionEliptica,
    MatrizLorentz,
    PuntoHiperbolico,
    VectorMinkowski,
    cadenaConstantes,
    constanteCk,
    constanteJorgensen,
    cotaInferiorNorma,
    deltaCruce,
    distancia,
    distanciaConjuntoFijo,
    formaBloques,
    impulso,
    incrustarRotacion,
    infimoCotaNorma,
    inversa,
    isometriaAleatoria,
    muestrearEliptico,
    muestrearTestigoIgualdad,
    normaMenosIdentidad,
    normaOperador,
    ordenDe,
    proyeccionConjuntoFijo,
    productoMinkowski,
    puntoBase,
)
from .nucleo.excepciones import (
    ErrorDesbordamiento,
    ErrorInvariante,
    ErrorMuestreo,
    ErrorNumerico,
    ErrorOrbivol,
    ErrorValidacion,
)
from .utilidades import ayuda, configurarRegistro, explicacion
from .verificacion import (
    ConfiguracionVerificacion,
    ReporteEnsayo,
    comprobarConteoSeparado,
    comprobarCotaEntradas,
    comprobarCotasElipticas,
    comprobarNormaDesdeEntradas,
    comprobarPerturbacionProducto,
    ejecutarTodo,
    exitoTotal,
)

# La biblioteca no muestra nada hasta que se llama a configurarRegistro()
logging.getLogger(__name__).addHandler(logging.NullHandler())


__all__ = [
    # Versión y metadata
    "__version__",
    # Geometría - Lorentz
    "MatrizLorentz",
    "PuntoHiperbolico",
    "VectorMinkowski",
    "distancia",
    "impulso",
    "incrustarRotacion",
    "inversa",
    "isometriaAleatoria",
    "normaOperador",
    "productoMinkowski",
    "puntoBase",
    # Geometría - Elípticos
    "ElementoEliptico",
    "EspecificacionEliptica",
    "cadenaConstantes",
    "constanteCk",
    "constanteJorgensen",
    "cotaInferiorNorma",
    "deltaCruce",
    "distanciaConjuntoFijo",
    "formaBloques",
    "infimoCotaNorma",
    "muestrearEliptico",
    "muestrearTestigoIgualdad",
    "normaMenosIdentidad",
    "ordenDe",
    "proyeccionConjuntoFijo",
    # Cotas
    "ConsultaCota",
    "ResultadoCota",
    "areaEsfera",
    "calcularCota",
    "cotaHurwitz",
    "cotaHurwitzOut",
    "estaSaturada",
    "integralSinhExacta",
    "logCocienteHurwitz",
    "logConteoEmpaquetamiento",
    "logConteoEmpaquetamientoDirecto",
    "logKappa",
    "logObjetivo",
    "logVolumenBola",
    "notacionCientifica",
    "volumenBola",
    # Verificación
    "ConfiguracionVerificacion",
    "ReporteEnsayo",
    "comprobarConteoSeparado",
    "comprobarCotaEntradas",
    "comprobarCotasElipticas",
    "comprobarNormaDesdeEntradas",
    "comprobarPerturbacionProducto",
    "ejecutarTodo",
    "exitoTotal",
    # Utilidades
    "ayuda",
    "configurarRegistro",
    "explicacion",
    # Excepciones
    "ErrorDesbordamiento",
    "ErrorInvariante",
    "ErrorMuestreo",
    "ErrorNumerico",
    "ErrorOrbivol",
    "ErrorValidacion",
]


def info():
    """
    Muestra información sobre Orbivol.
    """
    print(f"""
    ╔══════════════════════════════════════════════════════════════════╗
    ║                     ORBIVOL v{__version__}                               ║
    ║     Cotas de volumen para orbifolds hiperbólicos en Python       ║
    ╚══════════════════════════════════════════════════════════════════╝

    Órdenes de consola: orbivol bound | table | hurwitz | constants
                        orbivol ball-volume | verify
    """)
