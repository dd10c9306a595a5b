import json

import pytest

from app import create_app
from toric.lattice_fan import del_pezzo6, hirzebruch, projective_plane, square
from toric.symmetry import group_from_generators, trivial_group
from toric.unimodular import UnimodularMatrix

from samples import A, B, C


def matrices(*rows):
    return [UnimodularMatrix.from_list(r) for r in rows]


@pytest.fixture
def p2():
    return projective_plane()


@pytest.fixture
def f2():
    return hirzebruch(2)


@pytest.fixture
def quadric():
    return square()


@pytest.fixture
def dp6():
    return del_pezzo6()


@pytest.fixture
def trivial():
    return trivial_group()


@pytest.fixture
def d8():
    return group_from_generators(matrices(B, C))


@pytest.fixture
def d12():
    return group_from_generators(matrices(A, C))


@pytest.fixture
def app():
    app = create_app()
    app.config['TESTING'] = True
    return app


@pytest.fixture
def client(app):
    return app.test_client()


@pytest.fixture
def write_json(tmp_path):
    """把数据写成 JSON 文件并返回路径"""
    def write(name, data):
        path = tmp_path / name
        path.write_text(json.dumps(data), encoding='utf-8')
        return str(path)
    return write
