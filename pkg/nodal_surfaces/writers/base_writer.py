# -*- coding: utf-8 -*-
#
# This file is part of Nodal-Surfaces.
# Copyright (C) 2026 Nodal-Surfaces contributors.
#
# Nodal-Surfaces is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Base writer for artifacts.

The base writer implements a basic API that allows subclasses to not having
to worry about writing files to disk.
"""

from __future__ import absolute_import, print_function

import os
from dataclasses import dataclass
from hashlib import md5

from flask import has_app_context

from ..proxies import current_nodal
from ..signals import bundle_writer_status
from ..utils import load_or_import_from_config


@dataclass(frozen=True)
class Artifact(object):
    """A named piece of output.

    ``content`` is text (written as UTF-8) or bytes.
    """

    name: str
    extension: str
    content: object
    family: str = None
    m: int = None

    @property
    def data(self):
        """Content as bytes."""
        if isinstance(self.content, bytes):
            return self.content
        return self.content.encode('utf-8')


def _name_formatter():
    if has_app_context():
        return current_nodal.artifact_name_formatter
    return load_or_import_from_config('NODAL_ARTIFACT_NAME_FORMATTER')


class BaseWriter(object):
    """Base writer.

    Writing is done in two steps:

    1. Generation of a list containing file information which contains all
       relevant information for writing down each file. This step has no
       side effect; subclasses add format specific files by overriding
       :py:meth:`BaseWriter._get_extra_files`.
    2. Actual IO, which takes the previously generated list as input and
       writes it under the output directory
       (:py:meth:`BaseWriter.write_all_files`).
    """

    def __init__(self, out_dir, artifacts, payload_dir='', extra_dir='',
                 name_formatter=None):
        """Base writer constructor.

        :param out_dir: directory receiving all files.
        :param artifacts: iterable of :py:class:`Artifact`.
        :param payload_dir: subdirectory where the artifacts are written.
        :param extra_dir: subdirectory where any extra files, specific to a
            bundle format, are written.
        :param name_formatter: callable giving the file name of an artifact;
            defaults to ``NODAL_ARTIFACT_NAME_FORMATTER``.
        """
        self.out_dir = str(out_dir)
        self.artifacts = list(artifacts)
        self.payload_dir = payload_dir
        self.extra_dir = extra_dir
        self.name_formatter = name_formatter or _name_formatter()

    def get_fullpath(self, filepath):
        """Absolute path of a file given relative to the output directory."""
        return os.path.join(os.path.abspath(self.out_dir), filepath)

    @staticmethod
    def _checksum(data):
        return 'md5:{0}'.format(md5(data).hexdigest())

    def _generate_artifact_info(self, artifact):
        """Generate the file information dictionary of an artifact."""
        filepath = os.path.join(self.payload_dir,
                                self.name_formatter(artifact))
        data = artifact.data
        return dict(
            checksum=self._checksum(data),
            size=len(data),
            filepath=filepath,
            fullpath=self.get_fullpath(filepath),
            artifact=artifact.name,
            content=data,
        )

    def _generate_extra_info(self, content, filename):
        """Generate the file information dictionary from raw text."""
        filepath = os.path.join(self.extra_dir, filename)
        data = content.encode('utf-8')
        return dict(
            checksum=self._checksum(data),
            size=len(data),
            filepath=filepath,
            fullpath=self.get_fullpath(filepath),
            content=data,
        )

    def _get_payload_files(self):
        """File information of all artifacts, in the given order."""
        return [self._generate_artifact_info(a) for a in self.artifacts]

    def _get_extra_files(self, payload_files):
        """File information on any additional files.

        :param payload_files: file information of the artifacts.
        """
        return []

    def get_all_files(self):
        """Get the complete list of files to write."""
        payload_files = self._get_payload_files()
        return payload_files + self._get_extra_files(payload_files)

    def _write_file(self, fileinfo):
        directory = os.path.dirname(fileinfo['fullpath'])
        if not os.path.isdir(directory):
            os.makedirs(directory)
        with open(fileinfo['fullpath'], 'wb') as fp:
            fp.write(fileinfo['content'])

    def write_all_files(self, filesinfo=None):
        """Write all files.

        :param filesinfo: list of file information dicts; defaults to
            :py:meth:`get_all_files`.
        :returns: the written file information.
        """
        if not filesinfo:
            filesinfo = self.get_all_files()
        if not all('content' in fi for fi in filesinfo):
            raise ValueError(
                'Missing content in one or more file-information entries: '
                '{0}'.format([fi['filepath'] for fi in filesinfo
                              if 'content' not in fi]))
        total_size = sum(fi['size'] for fi in filesinfo)
        written_size = 0
        for idx, fi in enumerate(filesinfo, 1):
            self._write_file(fi)
            written_size += fi['size']
            bundle_writer_status.send({
                'total_files': len(filesinfo),
                'total_size': total_size,
                'written_files': idx,
                'written_size': written_size,
                'current_filename': fi['filepath'],
                'current_filesize': fi['size'],
            })
        return filesinfo
