"""
Excepciones personalizadas para Orbivol.

Este módulo define todas las excepciones que pueden ocurrir al trabajar
con isometrías del espacio hiperbólico y con las cotas de volumen.
Todas las excepciones heredan de ErrorOrbivol para facilitar
el manejo de errores específicos de la biblioteca.
"""

from typing import Any, Optional


class ErrorOrbivol(Exception):
    """
    Excepción base para todos los errores de Orbivol.

    Esta es la clase base de la que heredan todas las excepciones
    personalizadas de la biblioteca. Permite capturar cualquier
    error específico de Orbivol con un solo bloque except.
    """
    pass


class ErrorValidacion(ErrorOrbivol):
    """
    Error de uso: un argumento no cumple sus restricciones.

    Se lanza cuando un parámetro está fuera de su dominio, por ejemplo
    un orden de torsión k < 2, una distancia negativa, una matriz que
    no es ortogonal o dos vectores de dimensiones distintas.

    Atributos:
        parametro: Nombre del parámetro que falló la validación
        mensaje: Descripción del error de validación
    """
    def __init__(self, parametro: str, mensaje: str = "") -> None:
        self.parametro: str = parametro
        self.mensaje: str = mensaje or f"Valor inválido para {parametro}"
        super().__init__(self.mensaje)


class ErrorInvariante(ErrorOrbivol):
    """
    Violación de un invariante geométrico.

    Se lanza cuando un objeto que debería vivir en el hiperboloide o en
    O⁺(1,n) no lo hace: puntos con −⟨x,y⟩ < 1, matrices que no preservan
    la forma de Minkowski, o conjuntos fijos que no cortan el hiperboloide
    (señal de que la isometría no es elíptica).

    Atributos:
        invariante: Nombre corto del invariante violado
        mensaje: Descripción del problema
    """
    def __init__(self, invariante: str, mensaje: str = "") -> None:
        self.invariante: str = invariante
        self.mensaje: str = mensaje or f"Se violó el invariante {invariante}"
        super().__init__(self.mensaje)


class ErrorNumerico(ErrorOrbivol):
    """
    Error numérico en un método iterativo.

    Se lanza cuando un método iterativo agota su límite de iteraciones
    sin converger. Conserva el último iterado para diagnóstico.

    Atributos:
        mensaje: Descripción del fallo
        ultimoIterado: Último valor calculado antes de abandonar
    """
    def __init__(self, mensaje: str = "El método no convergió",
                 ultimoIterado: Optional[Any] = None) -> None:
        self.mensaje: str = mensaje
        self.ultimoIterado: Optional[Any] = ultimoIterado
        super().__init__(self.mensaje)


class ErrorDesbordamiento(ErrorNumerico):
    """
    El cálculo excede el rango de los números de doble precisión.

    Por ejemplo, cosh(δ) desborda para |δ| > 700.
    """
    pass


class ErrorMuestreo(ErrorOrbivol):
    """
    El muestreador agotó sus reintentos sin producir un elemento válido.

    Atributos:
        mensaje: Descripción del problema
        intentos: Número de intentos realizados
    """
    def __init__(self, mensaje: str = "No se pudo muestrear el elemento",
                 intentos: int = 0) -> None:
        self.mensaje: str = mensaje
        self.intentos: int = intentos
        super().__init__(self.mensaje)
