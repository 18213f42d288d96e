#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""공통 모듈 (예외, 유틸리티, 결과 출력)"""
