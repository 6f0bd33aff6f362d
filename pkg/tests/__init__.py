# -*- coding: utf-8 -*-
"""
测试模块
========
ncgerm 项目的测试包。
"""
