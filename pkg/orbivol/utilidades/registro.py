"""
Registro de diagnósticos de Orbivol.

La biblioteca escribe en la jerarquía estándar de ``logging`` bajo el
nombre ``orbivol``. Por defecto no se muestra nada; la CLI (o el usuario)
llama a configurarRegistro() para ver los mensajes en stderr con rich.
"""

import logging
from typing import Union

from rich.console import Console
from rich.logging import RichHandler

NOMBRE_RAIZ = "orbivol"


def configurarRegistro(nivel: Union[int, str] = logging.WARNING) -> logging.Logger:
    """
    Conecta el logger raíz de Orbivol a un RichHandler sobre stderr.

    Llamarla varias veces no duplica manejadores: el RichHandler anterior
    se reemplaza.

    Args:
        nivel: Nivel mínimo de los mensajes (int o nombre como "DEBUG")

    Returns:
        El logger raíz ``orbivol``

    Ejemplo:
        >>> from orbivol.utilidades.registro import configurarRegistro
        >>> registro = configurarRegistro("DEBUG")
    """
    registro = logging.getLogger(NOMBRE_RAIZ)

    for manejador in list(registro.handlers):
        if isinstance(manejador, RichHandler):
            registro.removeHandler(manejador)

    manejador = RichHandler(
        console=Console(stderr=True),
        show_path=False,
        rich_tracebacks=True,
    )
    manejador.setFormatter(logging.Formatter("%(name)s: %(message)s"))
    registro.addHandler(manejador)
    registro.setLevel(nivel)

    return registro
