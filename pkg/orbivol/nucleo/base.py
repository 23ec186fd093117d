"""
Clases base abstractas de Orbivol.

Estas clases definen la estructura común de las comprobaciones empíricas
de desigualdades: cada lema verificable se modela como una subclase que
sabe ejecutar un ensayo aislado a partir de una semilla.
"""

from abc import ABC, abstractmethod
from typing import Any, Dict


class ComprobacionDesigualdad(ABC):
    """
    Clase base abstracta para la verificación aleatoria de una desigualdad.

    Un ensayo genera una instancia a partir de su semilla, evalúa ambos
    lados de la desigualdad y devuelve la holgura como cociente, de modo
    que una holgura ≥ 1 significa que la desigualdad se cumple:

    - cotas inferiores (lhs ≥ cota): holgura = lhs / cota
    - cotas superiores (valor ≤ cota): holgura = cota / valor

    La agregación de ensayos (conteo de violaciones, holgura mínima,
    semilla peor) vive en ``orbivol.verificacion``; las subclases solo
    describen un ensayo.

    Atributos:
        idLema: Identificador estable de la desigualdad verificada
    """

    idLema: str = ""

    @abstractmethod
    def ensayo(self, semilla: int) -> float:
        """
        Ejecuta un ensayo determinista.

        Args:
            semilla: Semilla del ensayo (ya derivada de la semilla maestra)

        Returns:
            Holgura del ensayo (≥ 0; < 1 indica violación)
        """
        pass

    @abstractmethod
    def describir(self) -> Dict[str, Any]:
        """
        Describe los parámetros de la comprobación.

        Returns:
            Diccionario serializable con los parámetros del experimento
        """
        pass

    @property
    def clave(self) -> str:
        """Identificador del lema junto con sus parámetros, p. ej. "cota-entradas(n=3, r=1.0)"."""
        parametros = ", ".join(f"{clave}={valor}" for clave, valor in self.describir().items())
        return f"{self.idLema}({parametros})"

    def __repr__(self) -> str:
        """Representación de la comprobación."""
        return f"{self.__class__.__name__}<{self.clave}>"
