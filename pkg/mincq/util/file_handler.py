"""Reading and writing of mincq files, dispatched on the file extension.

- json: representation documents (exact values as "num/den" strings)
- obj: quad meshes with degenerate vertex markers
- csv: sample tables (structured arrays)
- txt: reports and closed forms
- hdf5: sample tables (structured arrays)

Writes are deterministic: fixed float format, LF line endings.
"""

from mincq.util.base_class import CustomABC
from mincq.errors import ParseError

FLOAT_FORMAT = "%.12g"


class FileHandler(CustomABC):
    labels = {}
    associated_types = {"h5": "hdf5", "dat": "txt", "log": "txt"}

    @classmethod
    def _handler(cls, filename):
        ending = filename.split(".")[-1].lower()
        if ending not in cls.labels:
            try:
                ending = cls.associated_types[ending]
            except KeyError:
                raise ParseError(f"unsupported file extension '.{ending}'", filename) from None
        return cls.labels[ending]

    @classmethod
    def save(cls, filename, data, **kwargs):
        """
        Parameters:
            filename (str)
            data (dict, Mesh, ndarray, str): Content matching the extension.
            kwargs: Options like the float format for specific child classes.
        """
        cls._handler(filename).save(filename, data, **kwargs)

    @classmethod
    def load(cls, filename, as_type="dtype"):
        """
        Parameters:
            filename (str)
            as_type (str): Identifier in which format the data should be returned.
                Options: dtype (structured array), dict
        """
        return cls._handler(filename).load(filename, as_type)


@FileHandler.register("json")
class JsonHandler(FileHandler):
    @classmethod
    def save(cls, filename, data, indent=2):
        import json

        with open(filename, "w", newline="\n") as f:
            json.dump(data, f, indent=indent)
            f.write("\n")

    @classmethod
    def load(cls, filename, as_type="dict"):
        import json

        try:
            with open(filename) as f:
                return json.load(f)
        except json.JSONDecodeError as err:
            raise ParseError(f"invalid JSON ({err.msg}, line {err.lineno})", filename) from err


@FileHandler.register("obj")
class ObjHandler(FileHandler):
    """Wavefront OBJ: ``v`` records row-major, ``# degenerate`` comments, then 1-based ``f`` quads."""

    @classmethod
    def save(cls, filename, data, fmt=FLOAT_FORMAT):
        vertex_format = f"v {fmt} {fmt} {fmt}\n"
        with open(filename, "w", newline="\n") as f:
            f.write(f"# mincq mesh {data.nu}x{data.nv}\n")
            for x, y, z in data.vertices:
                f.write(vertex_format % (x, y, z))
            for index in data.degenerate_indices():
                f.write(f"# degenerate {index + 1}\n")
            for quad in data.quads:
                f.write("f {} {} {} {}\n".format(*(int(i) + 1 for i in quad)))

    @classmethod
    def load(cls, filename, as_type="dict"):
        from numpy import array

        vertices, faces, degenerate = [], [], []
        with open(filename) as f:
            for line in f:
                fields = line.split()
                if not fields:
                    continue
                if fields[0] == "v":
                    vertices.append([float(x) for x in fields[1:4]])
                elif fields[0] == "f":
                    faces.append([int(i.split("/")[0]) - 1 for i in fields[1:]])
                elif fields[:2] == ["#", "degenerate"]:
                    degenerate.append(int(fields[2]) - 1)
        return {
            "vertices": array(vertices, dtype=float).reshape(-1, 3),
            "faces": array(faces, dtype=int),
            "degenerate": degenerate,
        }


@FileHandler.register("csv")
class CsvHandler(FileHandler):
    @classmethod
    def save(cls, filename, data, fmt=FLOAT_FORMAT):
        from numpy import column_stack, savetxt

        columns = column_stack([data[key].ravel() for key in data.dtype.names])
        savetxt(filename, columns, delimiter=",", header=",".join(data.dtype.names), comments="", fmt=fmt)

    @classmethod
    def load(cls, filename, as_type="dtype"):
        from numpy import genfromtxt

        data = genfromtxt(filename, delimiter=",", names=True)
        if as_type == "dict":
            return {key: data[key] for key in data.dtype.names}
        return data


@FileHandler.register("txt")
class TxtHandler(FileHandler):
    @classmethod
    def save(cls, filename, data, fmt=FLOAT_FORMAT):
        if isinstance(data, str):
            with open(filename, "w", newline="\n") as f:
                f.write(data if data.endswith("\n") else data + "\n")
            return
        from numpy import column_stack, savetxt

        header = " ".join(data.dtype.names)
        savetxt(filename, column_stack([data[key].ravel() for key in data.dtype.names]), header=header, fmt=fmt)

    @classmethod
    def load(cls, filename, as_type="str"):
        if as_type == "str":
            with open(filename) as f:
                return f.read()
        from numpy import genfromtxt

        return genfromtxt(filename, names=True)


@FileHandler.register("hdf5")
class HDF5Handler(FileHandler):
    """One dataset per column of a structured array, read back in the stored key order."""

    @classmethod
    def save(cls, filename, data, **kwargs):
        from h5py import File

        with File(filename, "w") as h5f:
            for key in data.dtype.names:
                h5f.create_dataset(key, data=data[key])
            h5f.attrs["columns"] = ",".join(data.dtype.names)

    @classmethod
    def load(cls, filename, as_type="dtype"):
        from h5py import File
        from numpy import asarray, zeros

        with File(filename, "r") as h5f:
            keys = h5f.attrs.get("columns", ",".join(h5f.keys())).split(",")
            columns = {key: asarray(h5f[key]) for key in keys}
        if as_type == "dict":
            return columns
        data = zeros(columns[keys[0]].shape, dtype=[(key, float) for key in keys])
        for key in keys:
            data[key] = columns[key]
        return data
