"""
Validadores para los argumentos de Orbivol.

Funciones que verifican que los parámetros geométricos sean válidos
antes de usarlos. Cada validador lanza ErrorValidacion si el parámetro
no cumple su restricción, y devuelve el valor ya convertido.
"""

import math
from typing import Optional, Union

import numpy as np

from ..nucleo.excepciones import ErrorValidacion


def validarFinito(valor: Union[int, float], nombre: str = "valor") -> float:
    """
    Convierte a float y rechaza ±∞ y NaN.

    Todos los demás validadores reales pasan por aquí primero, así que
    ningún radio, volumen o distancia infinita llega a la cuadratura.

    Raises:
        ErrorValidacion: Si el valor no es convertible o no es finito
    """
    try:
        valorReal = float(valor)
    except (TypeError, ValueError):
        raise ErrorValidacion(nombre, f"{nombre} debe ser un número real")

    if not math.isfinite(valorReal):
        raise ErrorValidacion(nombre, f"{nombre} debe ser finito, recibido: {valorReal}")

    return valorReal


def validarPositivo(valor: Union[int, float], nombre: str = "valor") -> float:
    """
    Exige valor > 0.

    Radios de κ(r), volúmenes de Hurwitz y las constantes K, L de la
    perturbación son estrictamente positivos.

    Ejemplo:
        >>> validarPositivo(0.5, "r")
        0.5
        >>> validarPositivo(-1, "r")   # ErrorValidacion: r debe ser positivo
    """
    valorReal = validarFinito(valor, nombre)
    if valorReal <= 0.0:
        raise ErrorValidacion(nombre, f"{nombre} debe ser positivo, recibido: {valorReal}")
    return valorReal


def validarNoNegativo(valor: Union[int, float], nombre: str = "valor") -> float:
    """Exige valor ≥ 0 (distancias δ, radios de bolas, traslaciones máximas)."""
    valorReal = validarFinito(valor, nombre)
    if valorReal < 0.0:
        raise ErrorValidacion(nombre, f"{nombre} no puede ser negativo, recibido: {valorReal}")
    return valorReal


def validarRango(valor: Union[int, float],
                 minimo: Optional[float] = None,
                 maximo: Optional[float] = None,
                 nombre: str = "valor") -> float:
    """
    Exige minimo ≤ valor ≤ maximo; un extremo None no se comprueba.

    Se usa, por ejemplo, para acotar r en CotaEntradas por el límite de
    los impulsos.
    """
    valorReal = validarFinito(valor, nombre)

    if minimo is not None and valorReal < minimo:
        raise ErrorValidacion(nombre, f"{nombre} debe ser ≥ {minimo}, recibido: {valorReal}")
    if maximo is not None and valorReal > maximo:
        raise ErrorValidacion(nombre, f"{nombre} debe ser ≤ {maximo}, recibido: {valorReal}")

    return valorReal


def validarEntero(valor: Union[int, np.integer],
                  minimo: Optional[int] = None,
                  nombre: str = "valor") -> int:
    """
    Valida que un valor sea un entero, opcionalmente acotado por abajo.

    Dimensiones (n ≥ 2), órdenes de torsión (k ≥ 2) y números de
    ensayos (≥ 0) pasan por aquí.

    Args:
        valor: Entero a validar
        minimo: Valor mínimo permitido (inclusive)
        nombre: Nombre del parámetro

    Returns:
        El valor como int de Python

    Raises:
        ErrorValidacion: Si no es entero o es menor que el mínimo

    Ejemplo:
        >>> k = validarEntero(1, 2, "k")
        >>> # Lanza ErrorValidacion: k debe ser ≥ 2, recibido: 1
    """
    if isinstance(valor, bool) or not isinstance(valor, (int, np.integer)):
        raise ErrorValidacion(nombre, f"{nombre} debe ser un entero")

    valorInt = int(valor)

    if minimo is not None and valorInt < minimo:
        raise ErrorValidacion(
            nombre,
            f"{nombre} debe ser ≥ {minimo}, recibido: {valorInt}"
        )

    return valorInt


def validarDimension(n: int, nombre: str = "n") -> int:
    """Valida la dimensión del espacio hiperbólico (n ≥ 2)."""
    return validarEntero(n, 2, nombre)


def validarOrden(k: int, nombre: str = "k") -> int:
    """
    Valida el orden máximo de torsión (k ≥ 2).

    Con k = 1 las constantes degeneran (sin(π/1) = 0): el caso sin
    torsión no pertenece a esta biblioteca.
    """
    return validarEntero(k, 2, nombre)
