#!/usr/bin/env python3
# Copyright 2026 The SURGE-VQE Authors
# SPDX-License-Identifier: Apache-2.0
"""Emit FCIDUMP integral files plus sidecar reference energies.

Each grid point gets <name>.fcidump and <name>.json with the RHF and
(frozen-core) FCI energies computed by PySCF on exactly the integrals written
to the FCIDUMP. The C++ test suite only reads the emitted files.
"""
import argparse
import json
import os

from pyscf import ao2mo, fci, gto, mcscf, scf, symm
from pyscf.tools import fcidump

GRIDS = {
    "H2": [0.74, 2.0],
    "BH": [1.0, 1.25, 1.5, 1.75, 2.0, 2.25, 2.5, 2.75, 3.0],
    "LiH": [1.0, 1.5, 2.0, 2.5, 3.0, 3.5],
    "BeH2": [1.0, 1.3, 1.6, 2.0, 2.275, 2.6, 3.0],
}
FROZEN = {"H2": 0, "BH": 1, "LiH": 0, "BeH2": 1}


def geometry(molecule, r):
    if molecule == "H2":
        return f"H 0 0 0; H 0 0 {r}"
    if molecule == "BH":
        return f"B 0 0 0; H 0 0 {r}"
    if molecule == "LiH":
        return f"Li 0 0 0; H 0 0 {r}"
    if molecule == "BeH2":
        return f"H 0 0 {-0.9 * r}; Be 0 0 0; H 0 0 {r}"
    raise ValueError(molecule)


def generate_point(molecule, r, frozen_core, outdir):
    mol = gto.M(atom=geometry(molecule, r), basis="sto-3g", symmetry=True,
                symmetry_subgroup="C2v",
                unit="Angstrom", verbose=0)
    mf = scf.RHF(mol)
    mf.conv_tol = 1e-12
    mf.max_cycle = 200
    e_hf = mf.kernel()
    if not mf.converged:
        mf = mf.newton()
        e_hf = mf.kernel()
    if not mf.converged:
        return None

    ncore = FROZEN[molecule] if frozen_core else 0
    nmo = mf.mo_coeff.shape[1]
    ncas = nmo - ncore
    nelecas = mol.nelectron - 2 * ncore
    cas = mcscf.CASCI(mf, ncas, nelecas)
    cas.fcisolver = fci.direct_spin1.FCI(mol)
    cas.fcisolver.conv_tol = 1e-13
    h1, ecore = cas.get_h1eff()
    h2 = ao2mo.restore(8, cas.get_h2eff(), ncas)
    e_fci = cas.kernel()[0]

    orbsym_all = symm.label_orb_symm(mol, mol.irrep_id, mol.symm_orb, mf.mo_coeff)
    orbsym = fcidump._convert_orbsym(mol, orbsym_all[ncore:], True)

    name = f"{molecule}_R{r:.3f}".replace(".", "p")
    path = os.path.join(outdir, name + ".fcidump")
    fcidump.from_integrals(path, h1, h2, ncas, nelecas, nuc=ecore, ms=0,
                           orbsym=list(orbsym), tol=1e-15, float_format=" %.16e")
    sidecar = {
        "molecule": molecule,
        "R": r,
        "basis": "sto-3g",
        "frozen_core": ncore > 0,
        "hf_energy": float(e_hf),
        "fci_energy": float(e_fci),
        "n_qubits": 2 * ncas,
        "n_electrons": nelecas,
    }
    with open(os.path.join(outdir, name + ".json"), "w") as f:
        json.dump(sidecar, f, indent=2)
    return name


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--molecule", nargs="+", default=list(GRIDS))
    ap.add_argument("--grid", type=float, nargs="*")
    ap.add_argument("--frozen-core", action=argparse.BooleanOptionalAction, default=True)
    ap.add_argument("--out", required=True)
    args = ap.parse_args()
    os.makedirs(args.out, exist_ok=True)

    manifest = {"points": [], "failed": []}
    for molecule in args.molecule:
        for r in (args.grid or GRIDS[molecule]):
            name = generate_point(molecule, r, args.frozen_core, args.out)
            entry = {"molecule": molecule, "R": r}
            if name is None:
                manifest["failed"].append(entry)
            else:
                entry.update(fcidump=name + ".fcidump", sidecar=name + ".json")
                manifest["points"].append(entry)
    with open(os.path.join(args.out, "manifest.json"), "w") as f:
        json.dump(manifest, f, indent=2)


if __name__ == "__main__":
    main()
