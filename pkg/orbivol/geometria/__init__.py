"""
Geometría de Orbivol - Modelo del hiperboloide y elementos elípticos.

Contiene los tipos inmutables del grupo O⁺(1,n), la norma de operador,
las isometrías básicas y el análisis de isometrías de orden finito.
"""

# Imports locales
from .elipticos import (
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
from .lorentz import (
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
    reortogonalizar,
    rotacionAleatoria,
)

__all__ = [
    # Lorentz
    "MatrizLorentz",
    "PuntoHiperbolico",
    "VectorMinkowski",
    "desplazamientoPuntoBase",
    "distancia",
    "formaMinkowski",
    "impulso",
    "incrustarRotacion",
    "inversa",
    "isometriaAleatoria",
    "normaOperador",
    "productoMinkowski",
    "puntoBase",
    "reortogonalizar",
    "rotacionAleatoria",
    # Elípticos
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
]
