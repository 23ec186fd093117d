"""
Núcleo de Orbivol - Clases base, excepciones y constantes.

Este módulo contiene la clase abstracta de las comprobaciones de
desigualdades, el sistema de excepciones de la biblioteca y las
tolerancias numéricas compartidas.
"""

# Imports locales
from .base import ComprobacionDesigualdad
from .excepciones import (
    ErrorDesbordamiento,
    ErrorInvariante,
    ErrorMuestreo,
    ErrorNumerico,
    ErrorOrbivol,
    ErrorValidacion,
)

__all__ = [
    "ComprobacionDesigualdad",
    "ErrorDesbordamiento",
    "ErrorInvariante",
    "ErrorMuestreo",
    "ErrorNumerico",
    "ErrorOrbivol",
    "ErrorValidacion",
]
