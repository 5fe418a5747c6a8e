import pytest

from config import GlobalConfig
from multigraph import AttachmentHistory, MultiGraphInterface, load_edge_list, read_edge_list, write_edge_list
from multigraph.errors import EdgeListFormatError

GlobalConfig.DEBUG_MODE = True


@pytest.mark.parametrize("targets", [[], [1], [1, 1, 2, 3, 5]])
def test_write_then_read(tmp_path, targets):
    path = tmp_path / "g.tsv"
    history = AttachmentHistory(targets)
    write_edge_list(history, path)

    text = path.read_text()
    assert text.startswith(f"# pa-secdeg v1 n={len(targets)}\n")
    assert text.endswith("\n")
    assert read_edge_list(path) == history


def test_block_size_header(tmp_path):
    path = tmp_path / "g.tsv"
    history = AttachmentHistory([1, 1, 2, 3])
    MultiGraphInterface().save(history, path, block_size=2)

    assert path.read_text().splitlines()[0] == "# pa-secdeg v1 n=4 m=2"
    assert load_edge_list(path) == (history, 2)
    graph = MultiGraphInterface().load(path)
    assert graph.n == 2
    assert graph.degree(1) == 5


def test_body_layout(tmp_path):
    path = tmp_path / "g.tsv"
    write_edge_list(AttachmentHistory([1, 1, 2]), path)
    assert path.read_text().splitlines()[1:] == ["1\t1", "2\t1", "3\t2"]


@pytest.mark.parametrize(
    "content",
    [
        "# pa-secdeg v2 n=1\n1\t1\n",
        "n=1\n1\t1\n",
        "# pa-secdeg v1 n=2\n1\t1\n",
        "# pa-secdeg v1 n=2\n1\t1\n3\t1\n",
        "# pa-secdeg v1 n=2\n1\t1\n2\t3\n",
        "# pa-secdeg v1 n=1\n1\tx\n",
    ],
)
def test_malformed_files(tmp_path, content):
    path = tmp_path / "bad.tsv"
    path.write_text(content)
    with pytest.raises(EdgeListFormatError):
        read_edge_list(path)
