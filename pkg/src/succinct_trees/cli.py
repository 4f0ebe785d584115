"""Command-line front end: ``succinct-trees <command> ...``.

Exit status is 0 on success, 1 when ``verify`` finds a mismatch, 2 for usage
errors and 3 for unreadable or malformed files.
"""

import argparse
import csv
import sys
import time

import numpy as np

from . import formats, reference
from .bintree import SuccinctBinaryTree
from .cartesian import RmqIndex, StreamState, build_rmq
from .errors import MalformedEncodingError, SuccinctError
from .reference import Variant

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3

NODE_OPS = ("left", "right", "parent", "size", "inorder", "order", "is-leaf", "lca")


class UsageError(Exception):
    pass


def _variant(s):
    try:
        return Variant.parse(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"unknown variant {s!r} (use t1..t4)") from None


def _sizes(s):
    try:
        vals = [int(float(x)) for x in s.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad size list {s!r}") from None
    if not vals or min(vals) < 1:
        raise argparse.ArgumentTypeError("sizes must be positive")
    return vals


def _csv(rows, header, out):
    w = csv.writer(out, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)


# -- build -------------------------------------------------------------------

def cmd_build(args, out):
    a = formats.read_array(args.input)
    if a.size == 0:
        raise MalformedEncodingError(f"{args.input}: no values")
    variant = args.variant or Variant.T4
    if args.rmq and variant is not Variant.T4:
        raise UsageError("--rmq needs variant t4")
    st = StreamState(a)
    st.run()
    bits = st.sink.bits()
    if variant is Variant.T4:
        tree = SuccinctBinaryTree(bits, Variant.T4)
    else:
        linked = reference.inverse_transform(
            Variant.T4, reference.decode_bp(st.sink.to_string()))
        tree = SuccinctBinaryTree.from_linked(linked, variant)
    formats.write_tree(args.out, tree)
    _csv([[tree.n, tree.encoding_bits(), tree.index_bits(), st.aux_peak]],
         ["n", "encoding_bits", "index_bits", "peak_aux_bits"], out)
    return EXIT_OK


# -- query -------------------------------------------------------------------

def _node_at(tree, rank):
    try:
        return tree.select_inorder(rank)
    except LookupError:
        raise UsageError(f"node rank {rank} outside [1, {tree.n}]") from None


def _show(tree, u):
    return "none" if u is None else str(tree.inorder_rank(u))


def cmd_query(args, out):
    tree = formats.read_tree(args.tree)
    if args.rmq:
        if tree.variant is not Variant.T4:
            raise UsageError(f"tree file holds a {tree.variant.name} encoding; rmq needs T4")
        q = RmqIndex(tree)
        for i, j in args.rmq:
            if not 1 <= i <= j <= q.n:
                raise UsageError(f"range [{i}, {j}] not inside [1, {q.n}]")
            print(q.rmq(i, j), file=out)
        return EXIT_OK
    op = args.op
    nodes = [_node_at(tree, r) for r in args.node]
    if len(nodes) != (2 if op == "lca" else 1):
        raise UsageError(f"--op {op} takes {2 if op == 'lca' else 1} node rank(s)")
    u = nodes[0]
    if op == "left":
        print(_show(tree, tree.left_child(u)), file=out)
    elif op == "right":
        print(_show(tree, tree.right_child(u)), file=out)
    elif op == "parent":
        print(_show(tree, tree.parent_b(u)), file=out)
    elif op == "size":
        print(tree.subtree_size_b(u), file=out)
    elif op == "inorder":
        print(tree.inorder_rank(u), file=out)
    elif op == "order":
        print(tree.order_rank(u), file=out)
    elif op == "is-leaf":
        print("true" if tree.is_leaf_b(u) else "false", file=out)
    else:
        print(_show(tree, tree.lca_b(u, nodes[1])), file=out)
    return EXIT_OK


# -- convert -----------------------------------------------------------------

def cmd_convert(args, out):
    if args.input:
        with open(args.input, encoding="ascii") as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    src_v = args.variant or Variant.T1
    dst_v = args.to_variant or src_v
    print(formats.convert(text, args.src, args.dst, src_v, dst_v), file=out)
    return EXIT_OK


# -- verify ------------------------------------------------------------------

def _flip(s, seed):
    k = int(np.random.default_rng(seed).integers(len(s)))
    return s[:k] + (")" if s[k] == "(" else "(") + s[k + 1:]


def _verify_tree(t, rng, fault):
    """Return a list of (check name, passed) for one binary tree."""
    res = []
    o = {v: reference.transform(v, t)[0] for v in Variant}
    bp = {v: reference.encode_bp(o[v]) for v in Variant}
    if fault:
        bp[Variant.T1] = _flip(bp[Variant.T1], int(rng.integers(1 << 30)))
    res.append(("bp-reverse", bp[Variant.T1][::-1].translate(str.maketrans("()", ")("))
                == bp[Variant.T2]))
    res.append(("dfuds-rtl", reference.encode_dfuds(o[Variant.T1])
                == reference.encode_dfuds_rtl(o[Variant.T2])))
    res.append(("bp-dfuds", bp[Variant.T1] == reference.encode_dfuds(o[Variant.T4])))
    res.append(("bp-dfuds-mirror", bp[Variant.T3] == reference.encode_dfuds(o[Variant.T2])))
    res.append(("zaks", "(" + reference.zaks(t) == bp[Variant.T1]))
    res.append(("pods", reference.encode_pods(o[Variant.T1]) == bp[Variant.T4]))
    orc = reference.BinaryOracle(t)
    n = t.n
    for v in Variant:
        try:
            sbt = SuccinctBinaryTree(bp[v], v)
            ok = sbt.n == n
        except SuccinctError:
            res.append((f"ops-{v.name.lower()}", False))
            continue
        order = orc.preorder if v in (Variant.T1, Variant.T2) else orc.postorder
        for k in range(n if ok else 0):
            u = sbt.select_inorder(int(orc.inorder[k]))
            ok = (sbt.order_rank(u) == order[k]
                  and sbt.subtree_size_b(u) == orc.size[k]
                  and _rank_or_none(sbt, sbt.left_child(u)) == _inorder_of(orc, t.left[k])
                  and _rank_or_none(sbt, sbt.right_child(u)) == _inorder_of(orc, t.right[k])
                  and _rank_or_none(sbt, sbt.parent_b(u)) == _inorder_of(orc, orc.parent[k]))
            if not ok:
                break
        for _ in range(8 if ok and n else 0):
            x, y = rng.integers(n, size=2)
            got = sbt.lca_b(sbt.select_inorder(int(orc.inorder[x])),
                            sbt.select_inorder(int(orc.inorder[y])))
            if sbt.inorder_rank(got) != orc.inorder[orc.lca(x, y)]:
                ok = False
                break
        res.append((f"ops-{v.name.lower()}", ok))
    return res


def _rank_or_none(sbt, u):
    return None if u is None else sbt.inorder_rank(u)


def _inorder_of(orc, k):
    return None if k < 0 else int(orc.inorder[k])


def _verify_array(a, rng, fault):
    s = StreamState(a)
    s.run()
    got = s.sink.to_string()
    if fault:
        got = _flip(got, int(rng.integers(1 << 30)))
    want = reference.encode_bp(reference.transform(Variant.T4, reference.naive_cartesian(a))[0])
    res = [("stream", got == want)]
    try:
        q = build_rmq(got, len(a))
    except SuccinctError:
        return res + [("rmq", False)]
    ok = True
    for _ in range(64):
        i, j = sorted(rng.integers(1, len(a) + 1, size=2).tolist())
        if q.rmq(i, j) != i + int(np.argmin(a[i - 1:j])):
            ok = False
            break
    return res + [("rmq", ok)]


def cmd_verify(args, out):
    rng = np.random.default_rng(args.seed)
    tally = {}
    fault = args.inject_fault
    for k in range(args.trees):
        n = int(rng.integers(1, args.max_n + 1))
        t = reference.random_binary_tree(n, int(rng.integers(1 << 62)))
        checks = _verify_tree(t, rng, fault and k == 0)
        hi = int(rng.choice([4, 1 << 40]))
        a = rng.integers(0, hi, size=n)
        checks += _verify_array(a, rng, fault and k == 0)
        for name, ok in checks:
            c = tally.setdefault(name, [0, 0])
            c[0] += 1
            c[1] += not ok
    _csv([[name, c[0], c[1]] for name, c in tally.items()],
         ["check", "cases", "failures"], out)
    return EXIT_VERIFY if any(c[1] for c in tally.values()) else EXIT_OK


# -- bench -------------------------------------------------------------------

def cmd_bench(args, out):
    rng = np.random.default_rng(args.seed)
    rows = []
    # load the compiled kernels before anything is timed
    warm = StreamState(np.array([2, 1, 3]))
    warm.run()
    build_rmq(warm.sink.bits(), 3).rmq(1, 3)
    for n in args.sizes:
        a = rng.integers(0, 1 << 40, size=n)
        t0 = time.perf_counter()
        st = StreamState(a)
        st.run()
        q = build_rmq(st.sink.bits(), n)
        build_ms = (time.perf_counter() - t0) * 1e3
        ii = rng.integers(1, n + 1, size=args.queries)
        jj = rng.integers(1, n + 1, size=args.queries)
        ii, jj = np.minimum(ii, jj).tolist(), np.maximum(ii, jj).tolist()
        q.rmq(ii[0], jj[0])
        t0 = time.perf_counter()
        for i, j in zip(ii, jj):
            q.rmq(i, j)
        rmq_us = (time.perf_counter() - t0) / args.queries * 1e6
        tree = q.tree
        nodes = [tree.select_inorder(i) for i in ii]
        t0 = time.perf_counter()
        for u in nodes:
            tree.parent_b(u)
            tree.left_child(u)
            tree.right_child(u)
        nav_us = (time.perf_counter() - t0) / (3 * len(nodes)) * 1e6
        total = tree.encoding_bits() + tree.index_bits()
        rows.append([n, f"{build_ms:.1f}", f"{rmq_us:.2f}", f"{nav_us:.2f}",
                     f"{total / n:.3f}", f"{tree.index_bits() / tree.encoding_bits():.4f}",
                     st.aux_peak])
    _csv(rows, ["n", "build_ms", "rmq_us", "nav_us", "bits_per_node",
                "index_overhead", "peak_aux_bits"], out)
    return EXIT_OK


# -- entry point -------------------------------------------------------------

def make_parser():
    p = argparse.ArgumentParser(
        prog="succinct-trees",
        description="Succinct binary trees and range-minimum queries.")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="encode an array's Cartesian tree")
    b.add_argument("--input", required=True, help="array file (text, or .i64 binary)")
    b.add_argument("--variant", type=_variant, help="t1..t4 (default t4)")
    b.add_argument("--rmq", action="store_true", help="build an RMQ index (variant t4)")
    b.add_argument("--out", required=True, help="tree file to write")

    q = sub.add_parser("query", help="answer queries against a tree file")
    q.add_argument("--tree", required=True)
    g = q.add_mutually_exclusive_group(required=True)
    g.add_argument("--rmq", nargs=2, type=int, action="append", metavar=("I", "J"),
                   help="1-based range; may be repeated")
    g.add_argument("--op", choices=NODE_OPS)
    q.add_argument("--node", nargs="+", type=int, default=[],
                   help="node(s) by 1-based inorder rank")

    c = sub.add_parser("convert", help="convert between bp, zaks and dfuds")
    c.add_argument("--from", dest="src", choices=formats.ENCODINGS, required=True)
    c.add_argument("--to", dest="dst", choices=formats.ENCODINGS, required=True)
    c.add_argument("--variant", type=_variant,
                   help="transformation the source bp/dfuds refers to (default t1)")
    c.add_argument("--to-variant", type=_variant,
                   help="transformation for the target (default: same as --variant)")
    c.add_argument("--input", help="file holding the encoding (default stdin)")

    v = sub.add_parser("verify", help="check encodings and queries against oracles")
    v.add_argument("--max-n", type=int, default=64)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--trees", type=int, default=200)
    v.add_argument("--inject-fault", action="store_true",
                   help="corrupt one bit of one encoding to test the checker")

    k = sub.add_parser("bench", help="time construction and queries")
    k.add_argument("--sizes", type=_sizes, default=[10**3, 10**4, 10**5, 10**6])
    k.add_argument("--queries", type=int, default=10000)
    k.add_argument("--seed", type=int, default=0)
    return p


COMMANDS = {"build": cmd_build, "query": cmd_query, "convert": cmd_convert,
            "verify": cmd_verify, "bench": cmd_bench}


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    if args.command == "query" and args.op and not args.node:
        parser.print_usage(sys.stderr)
        print("succinct-trees: error: --op needs --node", file=sys.stderr)
        return EXIT_USAGE
    if args.command in ("verify", "bench"):
        bad = (args.max_n < 1 or args.trees < 1) if args.command == "verify" else args.queries < 1
        if bad:
            print("succinct-trees: error: counts must be positive", file=sys.stderr)
            return EXIT_USAGE
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as e:
        print(f"succinct-trees: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, SuccinctError, UnicodeDecodeError) as e:
        print(f"succinct-trees: error: {e}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
