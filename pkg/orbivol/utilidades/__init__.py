"""
Utilidades de Orbivol - Herramientas generales.

Este módulo contiene funciones para validar parámetros, decorar código
con ayuda matemática, configurar el registro de diagnósticos, evaluar en
paralelo con orden determinista y dar formato a la salida de la CLI.
"""

# Imports locales
from .decoradores import ayuda, explicacion, validarArgumentos
from .formato import aCsv, aJson, aTexto, formatearNumero, rutaEsquema, saneado
from .paralelo import mapearOrdenado
from .registro import configurarRegistro
from .validadores import (
    validarDimension,
    validarEntero,
    validarFinito,
    validarNoNegativo,
    validarOrden,
    validarPositivo,
    validarRango,
)

__all__ = [
    # Decoradores
    "ayuda",
    "explicacion",
    "validarArgumentos",
    # Formato
    "aCsv",
    "aJson",
    "aTexto",
    "formatearNumero",
    "rutaEsquema",
    "saneado",
    # Paralelo
    "mapearOrdenado",
    # Registro
    "configurarRegistro",
    # Validadores
    "validarDimension",
    "validarEntero",
    "validarFinito",
    "validarNoNegativo",
    "validarOrden",
    "validarPositivo",
    "validarRango",
]
