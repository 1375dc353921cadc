"""Command-line interface.

Exit status is 0 on success, 1 for usage errors and 2 when a model or solver
rejects its input. Every subcommand accepts ``--config FILE`` with
``key = value`` lines named like the long flags (``hierarchy-level = 2``);
flags given on the command line win over the file.
"""

import argparse
import csv
import math
import sys

import numpy as np

from . import __version__
from ._validation import num_qubits
from .basis import BasisKind, make_basis
from .circuit import AnsatzConfig
from .linalg import eigvalsh
from .molecules import MOLECULES, build_molecule_hamiltonian, derive_molecule, get_molecule, molecule_basis
from .morse import SusyMorseSpec, build_susy_hamiltonian
from .pauli import DEFAULT_THRESHOLD, ORDERING_NOTE, pauli_decompose, pauli_reconstruct, write_expansion
from .triatomic import TriatomicSpec, build_triatomic_hamiltonian
from .vqe import OptimizerSpec, optimizer_comparison, vqe_minimize, write_trace


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def dimensionless(x):
    return f"{x:.6g}"


def electronvolts(x):
    return f"{x:.5g}"


def parse_real(text):
    """Float, or ``sqrtN`` / ``sqrt(N)`` for a square root."""
    s = str(text).strip().lower().replace(" ", "")
    if s.startswith("sqrt"):
        return math.sqrt(float(s[4:].strip("()")))
    return float(s)


def parse_bool(text):
    s = str(text).strip().lower()
    if s in ("1", "true", "yes", "on"):
        return True
    if s in ("0", "false", "no", "off"):
        return False
    raise UsageError(f"not a boolean: {text!r}")


def read_config(path):
    values = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, value = line.partition("=")
            if not sep:
                raise UsageError(f"{path}:{lineno}: expected 'key = value'")
            values[key.strip().lstrip("-").replace("-", "_")] = value.strip()
    return values


# ---------------------------------------------------------------- arguments

def _solver_options(p):
    p.add_argument("--config", help="key = value file mirroring these flags")
    p.add_argument("--basis", default="oscillator", help="oscillator | position | fd")
    p.add_argument("--depth", type=int, default=3, help="Ry ansatz depth")
    p.add_argument("--optimizer", default="quasinewton",
                   help="quasinewton | gradient-descent | nelder-mead | spsa")
    p.add_argument("--max-iterations", type=int, default=600)
    p.add_argument("--restarts", type=int, default=1, help="independent random starts")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threshold", type=float, default=DEFAULT_THRESHOLD,
                   help="Pauli coefficient drop threshold")
    p.add_argument("--exact-only", action="store_true", help="skip the VQE")
    p.add_argument("--trace", help="write the VQE convergence trace CSV here")
    p.add_argument("--out", help="write the result table CSV here")


def _susy_options(p):
    g = p.add_argument_group("SUSY Morse model")
    g.add_argument("--A", type=float, default=5.0, help="Morse parameter")
    g.add_argument("--sign", choices=("minus", "plus"), default="minus")
    g.add_argument("--hierarchy-level", type=int, default=0)
    g.add_argument("--scale", type=float, default=1.0, help="overall multiplier (0.5 = scaled form)")
    g.add_argument("--qubits", type=int, default=None)
    g.add_argument("--dim", type=int, default=None)
    g.add_argument("--n-eigenvalues", type=int, default=5)


def _molecule_options(p):
    g = p.add_argument_group("diatomic molecule")
    g.add_argument("--name", help=f"built-in molecule: {', '.join(MOLECULES)}")
    g.add_argument("--mr", type=float, help="reduced mass (amu)")
    g.add_argument("--D", type=float, help="well depth (eV)")
    g.add_argument("--a", type=float, help="width (1/Angstrom)")
    g.add_argument("--all", action="store_true", help="run every built-in molecule")
    if "--qubits" not in p._option_string_actions:
        g.add_argument("--qubits", type=int, default=None)


def _triatomic_options(p):
    g = p.add_argument_group("triatomic molecule")
    g.add_argument("--m", type=parse_real, default=1.0)
    g.add_argument("--M", type=parse_real, default=2.0)
    g.add_argument("--C", type=parse_real, default=10.0)
    g.add_argument("--b", type=parse_real, default=math.sqrt(20.0), help="e.g. 4.47 or sqrt20")
    g.add_argument("--form", type=str.upper, choices=("H1", "H2"), default="H1")
    g.add_argument("--qubits-per-dim", type=int, default=4)


def build_parser():
    parser = _Parser(prog="morsevqe", description="Morse potential Hamiltonians and a simulated VQE.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser, required=True)

    p = sub.add_parser("susy", help="SUSY partner / hierarchy Hamiltonians",
                       description="Exact spectrum, Pauli term count and VQE energy of a SUSY "
                                   "Morse Hamiltonian. --out columns: "
                                   "basis,hamiltonian,level,dim,exact,vqe,pauli_terms")
    _solver_options(p)
    _susy_options(p)

    p = sub.add_parser("molecule", help="diatomic Morse molecules",
                       description="Derived molecular parameters plus matrix-exact and VQE ground "
                                   "energies. --out columns follow the two molecular tables: "
                                   "molecule,lambda_squared,e_mult,n_bound,E0_eV,E0_eV_vqe,"
                                   "lambda_squared_half,lambda,eps0_over_eps_inf,eps0,"
                                   "eps0_matrix,eps0_vqe")
    _solver_options(p)
    _molecule_options(p)
    p.set_defaults(qubits=4)

    p = sub.add_parser("triatomic", help="two-coordinate triatomic Morse Hamiltonians",
                       description="--out columns: form,dim,exact,vqe,pauli_terms")
    _solver_options(p)
    _triatomic_options(p)

    p = sub.add_parser("decompose", help="write a Pauli expansion file",
                       description="Build a model and write its Pauli expansion, one "
                                   f"'LABEL coefficient' per line ({ORDERING_NOTE}).")
    _solver_options(p)
    p.add_argument("--model", choices=("susy", "molecule", "triatomic", "identity"), default="susy")
    p.add_argument("--output", help="expansion file path")
    p.add_argument("--verify", action="store_true", help="reconstruct and report the Frobenius error")
    _susy_options(p)
    _molecule_options(p)
    _triatomic_options(p)

    p = sub.add_parser("compare", help="optimizer comparison on a SUSY Hamiltonian",
                       description="Runs several optimizers from one shared start. "
                                   "--out columns: method,energy,evaluations,gap")
    _solver_options(p)
    _susy_options(p)
    p.add_argument("--methods", default="quasinewton,nelder-mead,spsa")
    p.add_argument("--trace-prefix", help="write <prefix>_<method>.csv traces")
    return parser, sub.choices


def parse_args(argv):
    parser, subparsers = build_parser()
    args = parser.parse_args(argv)
    if args.config:
        sub = subparsers[args.command]
        try:
            values = read_config(args.config)
        except OSError as exc:
            parser.error(f"cannot read config: {exc}")
        except UsageError as exc:
            parser.error(str(exc))
        known = {a.dest: a for a in sub._actions}
        defaults = {}
        for key, value in values.items():
            action = known.get(key)
            if action is None or key in ("help", "config"):
                parser.error(f"unknown config key {key!r}")
            if isinstance(action, (argparse._StoreTrueAction, argparse._StoreFalseAction)):
                try:
                    defaults[key] = parse_bool(value)
                except UsageError as exc:
                    parser.error(str(exc))
            else:
                defaults[key] = value
        sub.set_defaults(**defaults)
        args = parser.parse_args(argv)
    return args


# ------------------------------------------------------------------- models

def _dimension(args, default_qubits=4):
    q, d = args.qubits, args.dim
    if q is not None and d is not None and 2**q != d:
        raise ValueError(f"dimension mismatch: --qubits {q} implies dim {2**q}, but --dim is {d}")
    if d is None:
        d = 2 ** (default_qubits if q is None else q)
    needs_qubits = not args.exact_only or getattr(args, "command", "") == "decompose"
    if needs_qubits:
        num_qubits(d)
    return d


def susy_model(args):
    spec = SusyMorseSpec(args.A, args.sign, args.scale, args.hierarchy_level)
    dim = _dimension(args)
    pair = make_basis(args.basis, dim)
    label = "H-" if args.sign == "minus" else "H+"
    if args.hierarchy_level:
        label = f"H{args.hierarchy_level}"
    return build_susy_hamiltonian(spec, pair), label


def molecule_records(args):
    if args.all:
        return list(MOLECULES.values())
    if args.name:
        return [get_molecule(args.name)]
    raw = (args.mr, args.D, args.a)
    if all(v is not None for v in raw):
        return [derive_molecule(*raw)]
    raise UsageError("give --name, --all, or all of --mr, --D and --a")


def molecule_model(record, args):
    dim = 2 ** (args.qubits or 4)
    return build_molecule_hamiltonian(record.lam, molecule_basis(record, dim, args.basis))


def triatomic_model(args):
    spec = TriatomicSpec(args.m, args.M, args.C, args.b, args.form)
    pair = make_basis(args.basis, 2**args.qubits_per_dim)
    return build_triatomic_hamiltonian(spec, pair)


def _optimizer(args, method=None):
    return OptimizerSpec(method or args.optimizer, args.max_iterations, args.seed,
                         n_restarts=args.restarts)


def _run_vqe(H, args):
    config = AnsatzConfig(num_qubits(H.shape[0]), args.depth)
    return vqe_minimize(H, config, _optimizer(args))


def _write_rows(path, header, rows):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)


def _num(x):
    return "" if x is None else repr(float(x))


# --------------------------------------------------------------- commands

def cmd_susy(args):
    H, label = susy_model(args)
    w = eigvalsh(H)
    dim = H.shape[0]
    print(f"model: SUSY Morse {label}, A={args.A:g}, scale={args.scale:g}, basis={args.basis}, dim={dim}")
    print("exact eigenvalues: " + " ".join(dimensionless(v) for v in w[: args.n_eigenvalues]))
    terms = vqe_energy = None
    if dim >= 2 and not dim & (dim - 1):
        terms = len(pauli_decompose(H, threshold=args.threshold))
        print(f"pauli terms (threshold {args.threshold:g}): {terms}")
    if not args.exact_only:
        res = _run_vqe(H, args)
        vqe_energy = res.energy
        print(f"vqe energy: {dimensionless(res.energy)} ({res.method}, depth {args.depth}, "
              f"seed {args.seed}, {res.evaluations} evaluations)")
        print(f"vqe - exact: {res.energy - w[0]:.3e}")
        if args.trace:
            write_trace(res, args.trace)
    if args.out:
        _write_rows(args.out, ["basis", "hamiltonian", "level", "dim", "exact", "vqe", "pauli_terms"],
                    [[args.basis, label, args.hierarchy_level, dim, _num(w[0]), _num(vqe_energy),
                      "" if terms is None else terms]])
    return 0


def cmd_molecule(args):
    records = molecule_records(args)
    rows = []
    for k, rec in enumerate(records):
        H = molecule_model(rec, args)
        exact = float(eigvalsh(H)[0])
        print(f"{rec.name}: lambda^2={dimensionless(rec.lambda_squared)} E_mult={dimensionless(rec.e_mult)} "
              f"bound states={rec.n_bound} eps0={dimensionless(rec.epsilon0)} "
              f"eps_inf={dimensionless(rec.epsilon_inf)} E0={electronvolts(rec.ground_energy)} eV")
        print(f"  matrix ground: {dimensionless(exact)} ({electronvolts(rec.to_ev(exact))} eV)")
        vqe = None
        if not args.exact_only:
            res = _run_vqe(H, args)
            vqe = res.energy
            print(f"  vqe ground: {dimensionless(vqe)} ({electronvolts(rec.to_ev(vqe))} eV, "
                  f"{res.evaluations} evaluations)")
            if args.trace:
                path = args.trace if len(records) == 1 else f"{args.trace.rsplit('.csv', 1)[0]}_{rec.name}.csv"
                write_trace(res, path)
        rows.append([rec.name, _num(rec.lambda_squared), _num(rec.e_mult), rec.n_bound,
                     _num(rec.ground_energy), _num(None if vqe is None else rec.to_ev(vqe)),
                     _num(rec.epsilon_inf), _num(rec.lam), _num(rec.energy_ratio), _num(rec.epsilon0),
                     _num(exact), _num(vqe)])
    if args.out:
        _write_rows(args.out, ["molecule", "lambda_squared", "e_mult", "n_bound", "E0_eV", "E0_eV_vqe",
                               "lambda_squared_half", "lambda", "eps0_over_eps_inf", "eps0",
                               "eps0_matrix", "eps0_vqe"], rows)
    return 0


def cmd_triatomic(args):
    H = triatomic_model(args)
    exact = float(eigvalsh(H)[0])
    terms = len(pauli_decompose(H, threshold=args.threshold))
    print(f"model: triatomic {args.form}, m={args.m:g}, M={args.M:g}, C={args.C:g}, b={args.b:.6g}, "
          f"basis={args.basis}, dim={H.shape[0]}")
    print(f"exact ground: {dimensionless(exact)}")
    print(f"pauli terms (threshold {args.threshold:g}): {terms}")
    vqe = None
    if not args.exact_only:
        res = _run_vqe(H, args)
        vqe = res.energy
        print(f"vqe energy: {dimensionless(vqe)} ({res.method}, depth {args.depth}, seed {args.seed}, "
              f"{args.restarts} start(s), {res.evaluations} evaluations)")
        print(f"vqe - exact: {vqe - exact:.3e}")
        if args.trace:
            write_trace(res, args.trace)
    if args.out:
        _write_rows(args.out, ["form", "dim", "exact", "vqe", "pauli_terms"],
                    [[args.form, H.shape[0], _num(exact), _num(vqe), terms]])
    return 0


def cmd_decompose(args):
    if args.model == "identity":
        H = np.eye(2 ** (args.qubits or 1))
    elif args.model == "susy":
        H, _ = susy_model(args)
    elif args.model == "molecule":
        records = molecule_records(args)
        if len(records) != 1:
            raise UsageError("decompose needs a single molecule")
        H = molecule_model(records[0], args)
    else:
        H = triatomic_model(args)
    expansion = pauli_decompose(H, threshold=args.threshold)
    if args.output:
        write_expansion(expansion, args.output)
    print(f"{len(expansion)} terms (threshold {args.threshold:g}, {expansion.n_qubits} qubits)")
    if args.verify:
        err = float(np.linalg.norm(pauli_reconstruct(expansion) - H))
        print(f"reconstruction Frobenius error: {err:.3e}")
    return 0


def cmd_compare(args):
    H, label = susy_model(args)
    lmin = float(eigvalsh(H)[0])
    methods = [m.strip() for m in args.methods.split(",") if m.strip()]
    config = AnsatzConfig(num_qubits(H.shape[0]), args.depth)
    results = optimizer_comparison(H, config, methods, seed=args.seed, max_iterations=args.max_iterations)
    print(f"optimizer comparison on {label} (exact {dimensionless(lmin)}), seed {args.seed}")
    rows = []
    for method, res in results.items():
        print(f"  {method:<17} {dimensionless(res.energy):>12}  ({res.evaluations} evaluations)")
        rows.append([method, _num(res.energy), res.evaluations, _num(res.energy - lmin)])
        if args.trace_prefix:
            write_trace(res, f"{args.trace_prefix}_{method}.csv")
    if args.out:
        _write_rows(args.out, ["method", "energy", "evaluations", "gap"], rows)
    return 0


COMMANDS = {
    "susy": cmd_susy,
    "molecule": cmd_molecule,
    "triatomic": cmd_triatomic,
    "decompose": cmd_decompose,
    "compare": cmd_compare,
}


def main(argv=None):
    args = parse_args(argv)
    try:
        BasisKind.parse(args.basis)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"morsevqe {args.command}: error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"morsevqe {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
