from . import CurlHVITest

from curlhvi.core.utils import UsageError
from curlhvi.mesh import ProblemCoefficients, build_structured
from curlhvi.dg import (DGSpace, DoFVector, LoadFunctional, l2_project,
                        assemble_bilinear, assemble_mass, assemble_curl_curl,
                        assemble_penalty, assemble_energy_matrix,
                        assemble_load, assemble_subgradient_load,
                        tangential_jump, scalar_tangential_jump, average,
                        cross)
from curlhvi.linalg import symmetry_error
from curlhvi.analysis.norms import E_LIN, sinusoidal_source
import numpy as np


class TestAssembly(CurlHVITest):
    def test_symmetry(self):
        for level in range(4):
            space = DGSpace(build_structured(level))
            A = assemble_bilinear(space)
            self.assertEqual(A.shape, (space.n_dofs, space.n_dofs))
            self.assertLessEqual(symmetry_error(A), 1e-12)
            self.assertTrue(A.has_sorted_indices)

    def test_mass_block(self):
        mesh = build_structured(0)
        space = DGSpace(mesh)
        M = assemble_mass(space).toarray()
        area = 0.5
        expected = area / 12.0 * (np.ones((3, 3)) + np.eye(3))
        for k in range(len(mesh)):
            dofs = space.dof_indices(k)
            block = M[np.ix_(dofs, dofs)]
            self.assertTrue(np.allclose(block[0::2, 0::2], expected,
                                        atol=1e-15))
            self.assertTrue(np.allclose(block[1::2, 1::2], expected,
                                        atol=1e-15))
            self.assertTrue(np.allclose(block[0::2, 1::2], 0.0))
        self.assertTrue(np.allclose(assemble_mass(space, 2.0).toarray(),
                                    2.0 * M))

    def test_conforming_fields(self):
        # continuous P2 fields with vanishing tangential trace: every face
        # term drops out, a_h(u, v) = int u.v + int curl u curl v = 11/30
        space = DGSpace(build_structured(2), degree=2)
        u = l2_project(space, lambda x, y: (y * (1 - y), 2 * x * (1 - x)))
        v = l2_project(space, lambda x, y: (3 * y * (1 - y), -x * (1 - x)))
        A = assemble_bilinear(space, ProblemCoefficients(1.0, 1.0, 1000.0))
        self.assertAlmostEqual(np.dot(v.values, A.dot(u.values)),
                               11.0 / 30.0, delta=1e-11)
        volume = assemble_mass(space) + assemble_curl_curl(space)
        self.assertAlmostEqual(np.dot(v.values, volume.dot(u.values)),
                               11.0 / 30.0, delta=1e-12)

    def test_face_identity(self):
        mesh = build_structured(2)
        vspace = DGSpace(mesh)
        qspace = DGSpace(mesh, components=1)
        _, weights = vspace.face_quadrature()
        pairs = 200
        traces = {}
        for side in ('left', 'right'):
            v = np.empty((pairs, mesh.n_faces, 3, 2))
            q = np.empty((pairs, mesh.n_faces, 3))
            for i in range(pairs):
                np.random.seed(i)
                vi = DoFVector(vspace, np.random.standard_normal(
                    vspace.n_dofs))
                qi = DoFVector(qspace, np.random.standard_normal(
                    qspace.n_dofs))
                v[i] = vspace.face_traces(vi, side)
                q[i] = qspace.face_traces(qi, side)[..., 0]
            traces[side] = (v, q)
        v_l, q_l = traces['left']
        v_r, q_r = traces['right']
        lhs = np.zeros(pairs)
        form1 = np.zeros(pairs)
        form2 = np.zeros(pairs)
        scale = np.zeros(pairs)
        for f in range(mesh.n_faces):
            face = mesh.face(f)
            w = weights[f]
            n = face.normal
            # sum over elements of int_dK (n_K x v) q, face by face
            local = cross(n, v_l[:, f]) * q_l[:, f]
            if face.right is None:
                jv = tangential_jump(face, v_l[:, f])
                jq = scalar_tangential_jump(face, q_l[:, f])
                av = average(face, v_l[:, f])
                aq = average(face, q_l[:, f])
            else:
                local = local - cross(n, v_r[:, f]) * q_r[:, f]
                jv = tangential_jump(face, v_l[:, f], v_r[:, f])
                jq = scalar_tangential_jump(face, q_l[:, f], q_r[:, f])
                av = average(face, v_l[:, f], v_r[:, f])
                aq = average(face, q_l[:, f], q_r[:, f])
            first = np.dot(jv * aq, w)
            second = np.dot((jq * av).sum(axis=-1), w)
            lhs += np.dot(local, w)
            if face.right is None:
                form1 -= second
                form2 += first
            else:
                form1 += first - second
                form2 += first - second
            scale += np.abs(first) + np.abs(second)
        self.assertTrue(np.all(np.abs(lhs - form1) <= 1e-12 * scale))
        self.assertTrue(np.all(np.abs(lhs - form2) <= 1e-12 * scale))

    def test_penalty_decay(self):
        energies = []
        for level in range(1, 5):
            space = DGSpace(build_structured(level))
            u = l2_project(space, E_LIN.field).values
            P = assemble_penalty(space, 1000.0)
            energies.append(np.dot(u, P.dot(u)))
        ratios = np.array(energies[:-1]) / np.array(energies[1:])
        self.assertTrue(np.all(ratios >= 1.8), ratios)

    def test_eta_scaling(self):
        space = DGSpace(build_structured(2))
        eta = 1000.0
        A1 = assemble_bilinear(space, ProblemCoefficients(1.0, 1.0, eta))
        A2 = assemble_bilinear(space, ProblemCoefficients(1.0, 1.0, 2 * eta))
        P = assemble_penalty(space, eta)
        diff = (A2 - A1 - P).toarray()
        self.assertLessEqual(np.abs(diff).max(), 1e-13 * abs(P).max())

    def test_energy_matrix(self):
        space = DGSpace(build_structured(2))
        N = assemble_energy_matrix(space, 10.0)
        self.assertLessEqual(symmetry_error(N), 1e-14)
        u = l2_project(space, lambda x, y: (1.0, 0.0)).values
        # |u|^2 plus the boundary jumps on the two horizontal sides
        jump = 2 * 10.0 * sum(1.0 / (np.sqrt(2.0) / 4) * 0.25
                              for _ in range(4))
        self.assertAlmostEqual(np.dot(u, N.dot(u)), 1.0 + jump, delta=1e-10)

    def test_load(self):
        space = DGSpace(build_structured(0))
        zero = assemble_load(space, lambda x, y: (0.0 * x, 0.0 * y))
        self.assertTrue(np.all(zero.values == 0.0))
        unit = assemble_load(space, lambda x, y: (1.0, 0.0))
        self.assertAlmostEqual(unit.values[0::2].sum(), 1.0, delta=1e-15)
        self.assertAlmostEqual(unit.values[1::2].sum(), 0.0, delta=1e-15)
        source = sinusoidal_source()
        fx, fy = source(np.array(0.0), np.array(0.5))
        self.assertAlmostEqual(float(fx), 1 + 2 * np.pi ** 2, delta=1e-12)
        self.assertAlmostEqual(float(fy), 0.0, delta=1e-14)
        fx, fy = source(np.array(0.5), np.array(0.5))
        self.assertAlmostEqual(float(fx), 0.0, delta=1e-14)
        self.assertAlmostEqual(float(fy), 0.0, delta=1e-14)
        u = l2_project(space, lambda x, y: (1.0, 0.0))
        self.assertAlmostEqual(unit(u), 1.0)

    def test_subgradient_load(self):
        space = DGSpace(build_structured(2))
        shape = (space.n_elements, len(space.quadrature), 2)
        lam = np.zeros(shape)
        self.assertTrue(np.all(assemble_subgradient_load(space, lam).values
                               == 0.0))
        c = 0.75
        lam[..., 0] = c
        expected = assemble_load(space, lambda x, y: (c, 0.0))
        self.assertTrue(np.allclose(assemble_subgradient_load(space, lam)
                                    .values, expected.values, atol=1e-14))
        a = 0.004
        E = np.zeros(shape)
        E[..., 0] = 1.0
        lam = a * E / np.sqrt((E ** 2).sum(axis=-1))[..., None]
        expected = assemble_load(space, lambda x, y: (a, 0.0))
        self.assertTrue(np.allclose(assemble_subgradient_load(space, lam)
                                    .values, expected.values, atol=1e-16))
        with self.assertRaises(UsageError):
            assemble_subgradient_load(space, np.zeros((3, 2)))

    def test_load_functional(self):
        space = DGSpace(build_structured(1))
        f = LoadFunctional(space, np.ones(space.n_dofs))
        g = 2 * f - f
        self.assertTrue(np.allclose(g.values, f.values))
        self.assertEqual(len(g), space.n_dofs)
        with self.assertRaises(UsageError):
            LoadFunctional(space, np.ones(3))


if __name__ == '__main__':
    CurlHVITest.main()
