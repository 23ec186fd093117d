"""
Formatos de salida de la CLI: texto (tablas rich), CSV y JSON.

Todas las funciones devuelven cadenas; escribirlas a stdout o a un archivo
es asunto de quien llama. La salida es determinista: mismo registro, mismos
bytes.
"""

import csv
import io
import json
import math
from pathlib import Path
from typing import Any, Iterable, List, Optional, Sequence

from rich import box
from rich.console import Console
from rich.markup import escape
from rich.table import Table

from ..nucleo.configuracion import SENTINELA_SUBDESBORDAMIENTO

FORMATOS = ("text", "csv", "json")

# Ancho fijo: la alineación no depende de la terminal
ANCHO_TEXTO = 100

VERSION_ESQUEMA = "salida-v1"


def rutaEsquema() -> Path:
    """Ruta del esquema JSON que valida la salida de la CLI."""
    return Path(__file__).resolve().parent.parent / "esquemas" / f"{VERSION_ESQUEMA}.schema.json"


def saneado(valor: Any) -> Any:
    """
    Reemplaza recursivamente los flotantes no finitos por el centinela
    "underflow-sentinel" (y convierte tipos de numpy a nativos).
    """
    if isinstance(valor, dict):
        return {str(clave): saneado(v) for clave, v in valor.items()}
    if isinstance(valor, (list, tuple)):
        return [saneado(v) for v in valor]
    if isinstance(valor, bool) or valor is None or isinstance(valor, str):
        return valor
    if isinstance(valor, int):
        return valor
    if hasattr(valor, "item"):
        return saneado(valor.item())
    if isinstance(valor, float):
        return valor if math.isfinite(valor) else SENTINELA_SUBDESBORDAMIENTO
    return valor


def formatearNumero(valor: Any) -> str:
    """Representación de una celda: 12 cifras significativas para flotantes."""
    valor = saneado(valor)
    if isinstance(valor, bool):
        return "sí" if valor else "no"
    if isinstance(valor, float):
        return f"{valor:.12g}"
    if valor is None:
        return "-"
    return str(valor)


def aJson(registro: dict) -> str:
    """JSON con claves ordenadas e indentación 2, terminado en salto de línea."""
    return json.dumps(saneado(registro), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def aCsv(encabezado: Sequence[str], filas: Iterable[Sequence[Any]]) -> str:
    """CSV con separador coma y fin de línea "\\n"."""
    buffer = io.StringIO()
    escritor = csv.writer(buffer, lineterminator="\n")
    escritor.writerow(encabezado)
    for fila in filas:
        escritor.writerow([_celdaCsv(valor) for valor in fila])
    return buffer.getvalue()


def _celdaCsv(valor: Any) -> str:
    valor = saneado(valor)
    if isinstance(valor, float):
        return repr(valor)
    if valor is None:
        return ""
    return str(valor)


def aTexto(titulo: str,
           encabezado: Sequence[str],
           filas: Iterable[Sequence[Any]],
           notas: Optional[List[str]] = None) -> str:
    """
    Tabla rich renderizada a texto plano, sin colores y con ancho fijo.

    Args:
        titulo: Título de la tabla
        encabezado: Nombres de columna
        filas: Valores de cada fila
        notas: Líneas adicionales debajo de la tabla
    """
    tabla = Table(
        title=f"[bold cyan]{escape(titulo)}[/bold cyan]",
        box=box.ROUNDED,
        show_header=True,
        header_style="bold magenta",
    )

    for i, nombre in enumerate(encabezado):
        if i == 0:
            tabla.add_column(escape(nombre), style="cyan", justify="left")
        else:
            tabla.add_column(escape(nombre), justify="right")

    for fila in filas:
        tabla.add_row(*[escape(formatearNumero(valor)) for valor in fila])

    buffer = io.StringIO()
    consola = Console(
        file=buffer,
        width=ANCHO_TEXTO,
        color_system=None,
        force_terminal=False,
        highlight=False,
        emoji=False,
    )
    consola.print(tabla)
    for nota in notas or []:
        consola.print(escape(nota))

    return buffer.getvalue()
