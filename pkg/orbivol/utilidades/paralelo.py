"""
Evaluación paralela con orden determinista.

Los resultados se devuelven siempre en el orden de las entradas, de modo
que cualquier reducción posterior es independiente del número de hilos.
"""

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, TypeVar

from .validadores import validarEntero

T = TypeVar("T")
R = TypeVar("R")


def mapearOrdenado(funcion: Callable[[T], R],
                   entradas: Iterable[T],
                   trabajadores: int = 1) -> List[R]:
    """
    Aplica una función a cada entrada, opcionalmente en varios hilos.

    Args:
        funcion: Función pura de una entrada
        entradas: Valores a evaluar
        trabajadores: Número de hilos (1 = secuencial)

    Returns:
        Lista de resultados en el mismo orden que las entradas

    Raises:
        ErrorValidacion: Si trabajadores < 1
    """
    trabajadores = validarEntero(trabajadores, 1, "trabajadores")
    entradas = list(entradas)

    if trabajadores == 1 or len(entradas) <= 1:
        return [funcion(x) for x in entradas]

    # map() conserva el orden de las entradas, no el de llegada
    with ThreadPoolExecutor(max_workers=trabajadores) as ejecutor:
        return list(ejecutor.map(funcion, entradas))
