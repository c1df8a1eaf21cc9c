from . import CurlHVITest

from curlhvi.core.config import option_context
from curlhvi.core.utils import (CapacityError, DomainError, TopologyError,
                                ConfigurationError)
from curlhvi.mesh import (Mesh2D, ProblemCoefficients, INTERIOR, BOUNDARY,
                          build_structured, enumerate_faces,
                          element_diameter)
import numpy as np


class TestMesh2D(CurlHVITest):
    def test_counts(self):
        mesh = build_structured(0)
        self.assertEqual(len(mesh), 2)
        self.assertEqual(mesh.n_vertices, 4)
        mesh = build_structured(1)
        self.assertEqual(len(mesh), 8)
        self.assertEqual(mesh.n_vertices, 9)
        self.assertEqual(mesh.n_faces, 16)
        self.assertEqual(len(mesh.faces.interior), 8)
        self.assertEqual(len(mesh.faces.boundary), 8)
        for level in range(6):
            mesh = build_structured(level)
            n = 2 ** level
            self.assertEqual(mesh.n, n)
            self.assertEqual(len(mesh), 2 * n * n)
            self.assertEqual(mesh.n_vertices, (n + 1) ** 2)
            self.assertAlmostEqual(mesh.h, 1.0 / n)

    def test_areas(self):
        for level in range(6):
            mesh = build_structured(level)
            areas = mesh.signed_areas()
            n = mesh.n
            self.assertTrue(np.allclose(areas, 1.0 / (2 * n * n),
                                        rtol=1e-12))
            self.assertAlmostEqual(areas.sum(), 1.0, delta=1e-14)

    def test_level0_faces(self):
        mesh = build_structured(0)
        faces = enumerate_faces(mesh)
        self.assertEqual(len(faces), 5)
        interior = [f for f in faces if f.kind == INTERIOR]
        self.assertEqual(len(interior), 1)
        diag = interior[0]
        self.assertAlmostEqual(diag.h_f, np.sqrt(2.0))
        self.assertAlmostEqual(diag.length, np.sqrt(2.0))
        self.assertIsNotNone(diag.right)
        boundary = [f for f in faces if f.kind == BOUNDARY]
        for face in boundary:
            self.assertIsNone(face.right)

    def test_face_invariants(self):
        for level in range(6):
            mesh = build_structured(level)
            fa = mesh.faces
            self.assertEqual(len(fa),
                             (3 * len(mesh) + len(fa.boundary)) // 2)
            self.assertTrue(np.allclose((fa.normals ** 2).sum(axis=1), 1.0))
            # boundary length is the perimeter
            self.assertAlmostEqual(fa.lengths[fa.boundary].sum(), 4.0,
                                   delta=1e-13)
            # boundary faces lie on the boundary of the square
            mid = 0.5 * (fa.starts + fa.ends)[fa.boundary]
            on_side = np.isclose(mid, 0.0) | np.isclose(mid, 1.0)
            self.assertTrue(on_side.any(axis=1).all())
            # each triangle edge belongs to exactly one face
            counts = np.bincount(mesh.faces.element_faces.ravel(),
                                 minlength=len(fa))
            self.assertTrue(np.all(counts[fa.interior] == 2))
            self.assertTrue(np.all(counts[fa.boundary] == 1))

    def test_normals_point_outward(self):
        mesh = build_structured(2)
        fa = mesh.faces
        centroids = mesh.centroids()
        mid = 0.5 * (fa.starts + fa.ends)
        # normal points away from the left element
        out = ((mid - centroids[fa.left]) * fa.normals).sum(axis=1)
        self.assertTrue(np.all(out > 0))
        inner = fa.interior
        into = ((centroids[fa.right[inner]] - mid[inner])
                * fa.normals[inner]).sum(axis=1)
        self.assertTrue(np.all(into > 0))
        face = mesh.face(int(inner[0]))
        n2 = -face.normal
        self.assertTrue(np.array_equal(n2 + face.normal, np.zeros(2)))

    def test_h_f(self):
        previous = None
        for level in range(5):
            mesh = build_structured(level)
            h_f = mesh.faces.h_f
            self.assertTrue(np.allclose(h_f, np.sqrt(2.0) / mesh.n))
            if previous is not None:
                self.assertAlmostEqual(h_f.max(), previous / 2.0)
            previous = h_f.max()

    def test_h_f_smaller_neighbour(self):
        vertices = [[0.0, 0.0], [1.0, 0.0], [0.0, 1.0], [2.0, 2.0]]
        mesh = Mesh2D(vertices, [[0, 1, 2], [1, 3, 2]])
        self.assertTrue(np.allclose(mesh.diameters(),
                                    [np.sqrt(2.0), np.sqrt(5.0)]))
        fa = mesh.faces
        for index in range(mesh.n_faces):
            face = mesh.face(index)
            if face.kind == INTERIOR:
                self.assertEqual(face.vertices, (1, 2))
                self.assertAlmostEqual(face.h_f, np.sqrt(2.0))
            else:
                self.assertAlmostEqual(face.h_f,
                                       mesh.diameters()[face.left])
        self.assertEqual(len(fa.interior), 1)
        self.assertEqual(len(fa.boundary), 4)

    def test_element_diameter(self):
        mesh = build_structured(0)
        for k in range(len(mesh)):
            self.assertAlmostEqual(element_diameter(mesh, k), np.sqrt(2.0))
        mesh = build_structured(2)
        self.assertAlmostEqual(element_diameter(mesh, 5), np.sqrt(2.0) / 4)
        with self.assertRaises(DomainError):
            element_diameter(mesh, len(mesh))
        empty = Mesh2D(np.zeros((0, 2)), np.zeros((0, 3), dtype=int))
        with self.assertRaises(DomainError):
            element_diameter(empty, 0)

    def test_errors(self):
        with self.assertRaises(CapacityError):
            build_structured(13)
        with option_context('mesh.max_level', 2):
            with self.assertRaises(CapacityError):
                build_structured(3)
        with self.assertRaises(DomainError):
            build_structured(-1)
        vertices = [[0, 0], [1, 0], [0, 1]]
        # clockwise
        with self.assertRaises(TopologyError):
            Mesh2D(vertices, [[0, 2, 1]])
        mesh = Mesh2D(vertices, [[0, 1, 2]])
        self.assertEqual(mesh.n_faces, 3)
        self.assertEqual(len(mesh.faces.boundary), 3)
        with self.assertRaises(TopologyError):
            mesh.locate([[0.5, 0.5]])

    def test_non_manifold(self):
        vertices = [[0.0, 0.0], [1.0, 0.0], [0.0, 1.0], [0.5, 2.0]]
        # (0,1,2) and (0,1,3) both counterclockwise: the edge 0-1 is
        # shared by the two triangles, then a third copy of the edge
        mesh = Mesh2D(vertices, [[0, 1, 2], [0, 1, 3], [0, 1, 2]])
        with self.assertRaises(TopologyError):
            enumerate_faces(mesh)

    def test_locate(self):
        mesh = build_structured(3)
        centroids = mesh.centroids()
        self.assertTrue(np.array_equal(mesh.locate(centroids),
                                       np.arange(len(mesh))))

    def test_arrays_readonly(self):
        mesh = build_structured(1)
        with self.assertRaises(ValueError):
            mesh.vertices[0, 0] = 3.0
        with self.assertRaises(ValueError):
            mesh.faces.normals[0, 0] = 3.0

    def test_coefficients(self):
        coeffs = ProblemCoefficients()
        self.assertEqual(coeffs.eta, 1000.0)
        self.assertEqual(coeffs.epsilon, 1.0)
        self.assertAlmostEqual(float(coeffs.alpha(0.5)), 2000.0)
        scaled = coeffs.scaled(0.1)
        self.assertAlmostEqual(scaled.epsilon, 10.0)
        self.assertAlmostEqual(scaled.mu, 10.0)
        self.assertEqual(scaled.eta, 1000.0)
        with self.assertRaises(ConfigurationError):
            ProblemCoefficients(eta=0.0)
        with self.assertRaises(ConfigurationError):
            ProblemCoefficients(epsilon=-1.0)


if __name__ == '__main__':
    CurlHVITest.main()
