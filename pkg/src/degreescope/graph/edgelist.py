'''Reads and writes the edge-list text format: one "u v" edge per line, isolated nodes as "node u".'''

from .graph import Graph, normalize_edge
from ..errors import EdgeListError


def parse_edge_list(text: str) -> Graph:
    '''Builds a graph from an edge-list document. Blank lines and `#` comments are ignored.'''

    labels: list[str] = []
    seen_labels: set[str] = set()
    edges: list[tuple[str, str]] = []
    seen_edges: set[tuple[str, str]] = set()

    def add_label(label: str) -> None:
        if label not in seen_labels:
            seen_labels.add(label)
            labels.append(label)

    for line_no, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split('#', 1)[0].strip()
        if not line:
            continue

        parts = line.split()
        if len(parts) == 2 and parts[0] == 'node':
            add_label(parts[1])
            continue

        if len(parts) != 2:
            raise EdgeListError(f'expected "u v" or "node u", found {raw_line.strip()!r}', line_no)

        u, v = parts
        if u == v:
            raise EdgeListError(f'self-loop on node {u!r}', line_no)

        edge = normalize_edge(u, v)
        if edge in seen_edges:
            raise EdgeListError(f'duplicate edge {u}-{v}', line_no)
        seen_edges.add(edge)

        add_label(u)
        add_label(v)
        edges.append(edge)

    if not labels:
        raise EdgeListError('the document declares no nodes')

    return Graph(tuple(labels), frozenset(edges))


def format_edge_list(g: Graph) -> str:
    '''Writes `g` in edge-list format. Isolated nodes are declared with "node u".'''

    lines = [f'node {label}' for label in g.node_labels if g.degree(label) == 0]

    position = {label: idx for idx, label in enumerate(g.node_labels)}
    for u, v in sorted(g.edges, key=lambda e: (min(position[e[0]], position[e[1]]), max(position[e[0]], position[e[1]]))):
        if position[u] > position[v]:
            u, v = v, u
        lines.append(f'{u} {v}')

    return '\n'.join(lines) + '\n'


def load_edge_list(path: str) -> Graph:
    '''Loads a graph from an edge-list file.'''
    with open(path, 'r', encoding='utf-8') as f:
        return parse_edge_list(f.read())


def save_edge_list(g: Graph, path: str) -> None:
    '''Saves a graph to an edge-list file.'''
    with open(path, 'w', encoding='utf-8') as f:
        f.write(format_edge_list(g))
