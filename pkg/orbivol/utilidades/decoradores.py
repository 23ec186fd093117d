"""
Decoradores para Orbivol.

Este módulo contiene decoradores que añaden ayuda matemática contextual
a clases y funciones, y que validan argumentos antes de ejecutar.
"""

from functools import wraps
from typing import Callable, Optional
import inspect


def ayuda(descripcionMatematica: str,
          supuestos: Optional[list] = None,
          ejemplos: Optional[str] = None):
    """
    Decorador que añade ayuda matemática contextual a clases y funciones.

    Permite consultar el significado geométrico de un objeto directamente
    con help().

    Args:
        descripcionMatematica: Explicación del concepto
        supuestos: Lista de hipótesis bajo las que vale el resultado
        ejemplos: Código de ejemplo de uso

    Ejemplo de uso:
        >>> @ayuda(
        ...     descripcionMatematica="Isometría del hiperboloide",
        ...     supuestos=["AᵀJA = J", "a₁₁ ≥ 1"],
        ... )
        ... class MatrizLorentz:
        ...     pass

        >>> help(MatrizLorentz)
        # Mostrará toda la información matemática
    """
    def decorador(obj):
        docMatematica = f"""

╔══════════════════════════════════════════════════════════════════╗
║                   ORBIVOL - AYUDA MATEMÁTICA                     ║
╚══════════════════════════════════════════════════════════════════╝

{descripcionMatematica}
"""

        if supuestos:
            docMatematica += "\n HIPÓTESIS:\n"
            for i, supuesto in enumerate(supuestos, 1):
                docMatematica += f"   {i}. {supuesto}\n"

        if ejemplos:
            docMatematica += f"\n EJEMPLO DE USO:\n{ejemplos}\n"

        docMatematica += "\n" + "─" * 66 + "\n"

        docOriginal = obj.__doc__ or ""
        obj.__doc__ = docMatematica + docOriginal

        # Metadata para acceso programático
        obj._orbivol_ayuda = {
            'descripcion': descripcionMatematica,
            'supuestos': supuestos or [],
            'ejemplos': ejemplos
        }

        return obj

    return decorador


def explicacion(textoExplicativo: str):
    """
    Decorador que añade una explicación matemática a funciones y métodos.

    Args:
        textoExplicativo: Qué calcula la función, en términos geométricos

    Ejemplo:
        >>> @explicacion("Distancia hiperbólica: cosh d = −⟨x,y⟩")
        ... def distancia(x, y):
        ...     pass
    """

    def decorador(func):
        @wraps(func)
        def envoltura(*args, **kwargs):
            return func(*args, **kwargs)

        explicacionDoc = f"\n{'─'*50}\n EXPLICACIÓN MATEMÁTICA:\n{textoExplicativo}\n{'─'*50}\n"

        if func.__doc__:
            envoltura.__doc__ = explicacionDoc + func.__doc__
        else:
            envoltura.__doc__ = explicacionDoc

        return envoltura

    return decorador


def validarArgumentos(**validaciones):
    """
    Decorador que valida argumentos antes de ejecutar la función.

    Tipos de validación admitidos:
        'positivo', 'no_negativo', 'finito', 'dimension', 'orden',
        ('entero', minimo) y (minimo, maximo) para rangos reales.

    Los argumentos validados se reemplazan por su valor convertido
    (float o int), de modo que la función recibe tipos nativos.

    Ejemplo:
        >>> @validarArgumentos(n='dimension', r='positivo')
        ... def logVolumenBola(n, r):
        ...     ...
    """
    def decorador(func):
        firma = inspect.signature(func)

        @wraps(func)
        def envoltura(*args, **kwargs):
            from .validadores import (
                validarDimension,
                validarEntero,
                validarFinito,
                validarNoNegativo,
                validarOrden,
                validarPositivo,
                validarRango,
            )

            argumentos = firma.bind(*args, **kwargs)
            argumentos.apply_defaults()

            for nombreParam, tipoValidacion in validaciones.items():
                if nombreParam not in argumentos.arguments:
                    continue
                valor = argumentos.arguments[nombreParam]

                if tipoValidacion == 'positivo':
                    valor = validarPositivo(valor, nombreParam)
                elif tipoValidacion == 'no_negativo':
                    valor = validarNoNegativo(valor, nombreParam)
                elif tipoValidacion == 'finito':
                    valor = validarFinito(valor, nombreParam)
                elif tipoValidacion == 'dimension':
                    valor = validarDimension(valor, nombreParam)
                elif tipoValidacion == 'orden':
                    valor = validarOrden(valor, nombreParam)
                elif isinstance(tipoValidacion, tuple) and tipoValidacion[0] == 'entero':
                    valor = validarEntero(valor, tipoValidacion[1], nombreParam)
                elif isinstance(tipoValidacion, tuple):
                    # Rango: (min, max)
                    valor = validarRango(valor, tipoValidacion[0], tipoValidacion[1], nombreParam)

                argumentos.arguments[nombreParam] = valor

            return func(*argumentos.args, **argumentos.kwargs)

        return envoltura

    return decorador
