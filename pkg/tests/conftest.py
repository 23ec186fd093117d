"""
Fixtures compartidas de la suite de pruebas de Orbivol.
"""

import json

import numpy as np
import pytest
from click.testing import CliRunner

from orbivol.utilidades.formato import rutaEsquema


@pytest.fixture(scope="session")
def esquemaSalida():
    """Esquema JSON que acompaña al paquete."""
    return json.loads(rutaEsquema().read_text(encoding="utf-8"))


@pytest.fixture
def corredor():
    return CliRunner()


@pytest.fixture
def generador():
    return np.random.default_rng(12345)


BORDES = "╭╮╰╯├┤┬┴┼│"


def _comprobarAlineacion(texto):
    lineas = [linea for linea in texto.splitlines() if linea[:1] in ("╭", "│", "├", "╰")]
    assert lineas, texto
    assert len({len(linea) for linea in lineas}) == 1, texto

    columnas = [{i for i, caracter in enumerate(linea) if caracter in BORDES} for linea in lineas]
    assert all(c == columnas[0] for c in columnas), texto

    separadores = sorted(columnas[0])
    for fila in [linea for linea in lineas if linea.startswith("│")][1:]:
        # Primera columna a la izquierda, el resto a la derecha
        assert fila[separadores[0] + 1] == " " and fila[separadores[0] + 2] != " ", texto
        for posicion in separadores[2:]:
            assert fila[posicion - 1] == " " and fila[posicion - 2] != " ", texto
    return lineas


@pytest.fixture
def comprobarAlineacion():
    """Bordes verticales en las mismas columnas y celdas numéricas pegadas a la derecha."""
    return _comprobarAlineacion
